#pragma once

// Everything except the CLI (which pulls in the vendored CLI11 and json headers).

#include "dimgroup/error.hpp"
#include "dimgroup/ex1.hpp"
#include "dimgroup/ex3.hpp"
#include "dimgroup/interval.hpp"
#include "dimgroup/linalg.hpp"
#include "dimgroup/numfield.hpp"
#include "dimgroup/oracle.hpp"
#include "dimgroup/poly_real.hpp"
#include "dimgroup/polynomial.hpp"
#include "dimgroup/rational.hpp"
#include "dimgroup/rng.hpp"
#include "dimgroup/scalar_field.hpp"
#include "dimgroup/simplex.hpp"
