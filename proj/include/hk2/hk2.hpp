/*
 * Copyright 2026 the hk2 authors
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
 */

#ifndef HK2_HK2_HPP
#define HK2_HK2_HPP

#include "hk2/band.hpp"
#include "hk2/colength.hpp"
#include "hk2/colength_cache.hpp"
#include "hk2/conjecture.hpp"
#include "hk2/dyadic.hpp"
#include "hk2/expr_parse.hpp"
#include "hk2/f2_matrix.hpp"
#include "hk2/f2_poly.hpp"
#include "hk2/gamma.hpp"
#include "hk2/matrix.hpp"
#include "hk2/polynomial.hpp"
#include "hk2/quadratic.hpp"
#include "hk2/rational.hpp"
#include "hk2/rep_system.hpp"
#include "hk2/series.hpp"
#include "hk2/sextic_rep.hpp"
#include "hk2/sharp.hpp"
#include "hk2/xfunction.hpp"
#include "hk2/xspace.hpp"

#endif
