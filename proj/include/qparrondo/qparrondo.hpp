// Copyright 2026 The qparrondo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qparrondo/analytic.hpp"
#include "qparrondo/circuit.hpp"
#include "qparrondo/classical.hpp"
#include "qparrondo/coin_ops.hpp"
#include "qparrondo/common.hpp"
#include "qparrondo/optimizer.hpp"
#include "qparrondo/payoff.hpp"
#include "qparrondo/statevector.hpp"
#include "qparrondo/table.hpp"
