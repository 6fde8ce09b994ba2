/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "mf/binary_form.hpp"
#include "mf/brackets.hpp"
#include "mf/combinatorics.hpp"
#include "mf/configuration.hpp"
#include "mf/cremona.hpp"
#include "mf/error.hpp"
#include "mf/forms.hpp"
#include "mf/json_io.hpp"
#include "mf/matrix.hpp"
#include "mf/memo.hpp"
#include "mf/omega.hpp"
#include "mf/projective.hpp"
#include "mf/random.hpp"
#include "mf/rational.hpp"
#include "mf/suites.hpp"
#include "mf/trees.hpp"
#include "mf/veronese.hpp"
