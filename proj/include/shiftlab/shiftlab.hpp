/**
 * Umbrella header for the shiftlab library.
 */

#ifndef SHIFTLAB_SHIFTLAB_HPP
#define SHIFTLAB_SHIFTLAB_HPP

#include "binomial.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "fp.hpp"
#include "generic.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "minors.hpp"
#include "obstruction.hpp"
#include "prng.hpp"
#include "rigidity.hpp"
#include "shift_exterior.hpp"
#include "shift_symmetric.hpp"
#include "snf.hpp"

#endif
