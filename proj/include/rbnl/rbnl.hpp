// Copyright 2026 The rbnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "rbnl/chsh.hpp"
#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"
#include "rbnl/nelder_mead.hpp"
#include "rbnl/nrb.hpp"
#include "rbnl/realism.hpp"
#include "rbnl/sampling.hpp"
#include "rbnl/sphere_search.hpp"
#include "rbnl/state_io.hpp"
#include "rbnl/states.hpp"
#include "rbnl/sweep.hpp"
#include "rbnl/volume_mc.hpp"
