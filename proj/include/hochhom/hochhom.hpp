#ifndef HOCHHOM_HOCHHOM_HPP
#define HOCHHOM_HOCHHOM_HPP

#include "hochhom/algebra.hpp"
#include "hochhom/chain_complex.hpp"
#include "hochhom/cli.hpp"
#include "hochhom/errors.hpp"
#include "hochhom/graded.hpp"
#include "hochhom/hochschild.hpp"
#include "hochhom/homalg.hpp"
#include "hochhom/linalg.hpp"
#include "hochhom/matrix.hpp"
#include "hochhom/rational.hpp"
#include "hochhom/report.hpp"
#include "hochhom/simplicial.hpp"
#include "hochhom/sparse.hpp"
#include "hochhom/verify.hpp"

#endif
