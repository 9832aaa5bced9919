// Umbrella header.

#ifndef NLIE_NLIE_HPP_
#define NLIE_NLIE_HPP_

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "algebra.hpp"
#include "structmat.hpp"
#include "invariants.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "io.hpp"

#endif
