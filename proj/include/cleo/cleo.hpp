#pragma once

#include "cleo/algebra.hpp"
#include "cleo/coherent_states.hpp"
#include "cleo/errors.hpp"
#include "cleo/fock_matrix.hpp"
#include "cleo/measures.hpp"
#include "cleo/observables.hpp"
#include "cleo/quadrature.hpp"
#include "cleo/sga.hpp"
#include "cleo/special_functions.hpp"
