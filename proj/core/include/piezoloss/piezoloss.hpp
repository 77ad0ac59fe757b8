// Copyright 2026 The piezoloss authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "piezoloss/constants.hpp"
#include "piezoloss/database.hpp"
#include "piezoloss/device.hpp"
#include "piezoloss/errors.hpp"
#include "piezoloss/form_factor.hpp"
#include "piezoloss/geometry.hpp"
#include "piezoloss/io.hpp"
#include "piezoloss/loss.hpp"
#include "piezoloss/materials.hpp"
#include "piezoloss/quadrature.hpp"
#include "piezoloss/units.hpp"
