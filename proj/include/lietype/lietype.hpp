/*
   Copyright 2026 The lietype Authors

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

#ifndef LIETYPE_LIETYPE_HPP
#define LIETYPE_LIETYPE_HPP

#include "lietype/errors.hpp"
#include "lietype/polynomial.hpp"
#include "lietype/fields.hpp"
#include "lietype/matrix.hpp"
#include "lietype/rootdata.hpp"
#include "lietype/etale.hpp"
#include "lietype/groups.hpp"
#include "lietype/partitions.hpp"
#include "lietype/tori.hpp"
#include "lietype/symmetric.hpp"
#include "lietype/chars.hpp"
#include "lietype/dlchar.hpp"
#include "lietype/duality.hpp"
#include "lietype/exceptional.hpp"
#include "lietype/io.hpp"
#include "lietype/acceptance.hpp"

#endif
