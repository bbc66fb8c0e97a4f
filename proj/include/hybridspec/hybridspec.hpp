#pragma once

#include "casimir.hpp"
#include "coeffs.hpp"
#include "conformal.hpp"
#include "domains.hpp"
#include "error.hpp"
#include "interval.hpp"
#include "io.hpp"
#include "kernels.hpp"
#include "numeric.hpp"
#include "specfun.hpp"
#include "verify.hpp"
#include "zetafns.hpp"
