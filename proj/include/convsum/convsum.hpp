#ifndef CONVSUM_CONVSUM_HPP
#define CONVSUM_CONVSUM_HPP

#include "arith.hpp"
#include "convolution.hpp"
#include "eisenstein.hpp"
#include "eta.hpp"
#include "linalg.hpp"
#include "number.hpp"
#include "qseries.hpp"
#include "reference_data.hpp"
#include "representations.hpp"
#include "serialize.hpp"
#include "spaces.hpp"
#include "verify.hpp"

#endif // CONVSUM_CONVSUM_HPP
