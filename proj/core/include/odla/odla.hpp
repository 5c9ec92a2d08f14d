#pragma once

#include "odla/algebra.hpp"
#include "odla/classify3d.hpp"
#include "odla/decomp3d.hpp"
#include "odla/decomp_nd.hpp"
#include "odla/document.hpp"
#include "odla/errors.hpp"
#include "odla/scalar.hpp"
#include "odla/tensor.hpp"
