#pragma once
#ifndef OHS_OHS_HPP
#define OHS_OHS_HPP

#include "combinatorics.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "matrix_subspace.hpp"
#include "polynomial.hpp"
#include "rat_matrix.hpp"
#include "rational.hpp"
#include "scheme.hpp"
#include "spectral.hpp"
#include "structure.hpp"
#include "symtensor.hpp"
#include "terwilliger.hpp"

#endif  // OHS_OHS_HPP
