#pragma once

// Exact sign-variation toolkit for the Grassmannian and oriented matroids:
// rational linear algebra, Plucker coordinates, chirotopes and cocircuits,
// sign-variation criteria, perturbation schedules, amplituhedron
// well-definedness, positroid recovery, and brute-force oracles.

#include "omsv/amplituhedron.hpp"
#include "omsv/chirotope.hpp"
#include "omsv/cocircuits.hpp"
#include "omsv/criteria.hpp"
#include "omsv/feasibility.hpp"
#include "omsv/io.hpp"
#include "omsv/matrix.hpp"
#include "omsv/oracle.hpp"
#include "omsv/perturbation.hpp"
#include "omsv/plucker.hpp"
#include "omsv/positroid.hpp"
#include "omsv/rational.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"
