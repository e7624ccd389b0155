#pragma once

// Umbrella header for the matryoshka library.

#include "matryoshka/charpoly.hpp"
#include "matryoshka/construct.hpp"
#include "matryoshka/errors.hpp"
#include "matryoshka/exterior.hpp"
#include "matryoshka/form_io.hpp"
#include "matryoshka/gaussian.hpp"
#include "matryoshka/group.hpp"
#include "matryoshka/int_matrix.hpp"
#include "matryoshka/invariants.hpp"
#include "matryoshka/polynomial.hpp"
#include "matryoshka/properties.hpp"
#include "matryoshka/quadratic_field.hpp"
#include "matryoshka/reference_data.hpp"
#include "matryoshka/signed_permutation.hpp"
#include "matryoshka/spectral.hpp"
#include "matryoshka/su2.hpp"
#include "matryoshka/symmetry.hpp"
#include "matryoshka/verify.hpp"
