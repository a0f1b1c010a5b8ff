// Copyright 2026 The wgent Authors
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

// Umbrella header: the whole library in one include.

#include "wgent/cli.hpp"
#include "wgent/domain.hpp"
#include "wgent/entanglement.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"
#include "wgent/figures.hpp"
#include "wgent/io/config.hpp"
#include "wgent/io/csv.hpp"
#include "wgent/optimizer.hpp"
#include "wgent/protocols/n_photon.hpp"
#include "wgent/protocols/single_photon.hpp"
#include "wgent/protocols/two_photon.hpp"
#include "wgent/quadrature.hpp"
#include "wgent/scattering.hpp"
