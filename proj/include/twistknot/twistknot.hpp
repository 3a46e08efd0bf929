#pragma once

// Umbrella header: exact computation of non-abelian Reidemeister torsion,
// curve polynomials, character-variety polynomials, and cusp geometry for
// the double-twist family J(2, n).

#include "twistknot/charvar.hpp"
#include "twistknot/closedform.hpp"
#include "twistknot/errors.hpp"
#include "twistknot/format.hpp"
#include "twistknot/geometry.hpp"
#include "twistknot/matrix.hpp"
#include "twistknot/polynomial.hpp"
#include "twistknot/published.hpp"
#include "twistknot/rational.hpp"
#include "twistknot/real.hpp"
#include "twistknot/riley.hpp"
#include "twistknot/tables.hpp"
#include "twistknot/torsion.hpp"
#include "twistknot/words.hpp"
