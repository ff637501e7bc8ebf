/**************************************************************************
 * tgrs.hpp
 *
 * Copyright 2026 the tgrs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include "attack.hpp"
#include "census.hpp"
#include "code.hpp"
#include "distinguisher.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grs.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "mceliece.hpp"
#include "poly.hpp"
#include "poly_space.hpp"
#include "rng.hpp"
