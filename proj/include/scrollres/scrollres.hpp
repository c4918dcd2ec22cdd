#pragma once

#include "coefficients.hpp"
#include "monomial.hpp"
#include "scroll.hpp"
#include "ring.hpp"
#include "series.hpp"
#include "combinatorics.hpp"
#include "sparse_matrix.hpp"
#include "block_matrix.hpp"
#include "resolution.hpp"
#include "modp_linalg.hpp"
#include "verify.hpp"
#include "oracle.hpp"
#include "io.hpp"
