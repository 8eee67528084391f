// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "orbit/tolerances.hpp"
#include "orbit/errors.hpp"
#include "orbit/matrix.hpp"
#include "orbit/random.hpp"
#include "orbit/scalar_function.hpp"
#include "orbit/spectral.hpp"
#include "orbit/refine.hpp"
#include "orbit/positive_map.hpp"
#include "orbit/dilation.hpp"
#include "orbit/witness.hpp"
#include "orbit/jensen.hpp"
#include "orbit/subadditive.hpp"
#include "orbit/norms.hpp"
#include "orbit/statements.hpp"
#include "orbit/generate.hpp"
#include "orbit/suite.hpp"
#include "orbit/io.hpp"
