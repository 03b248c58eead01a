#pragma once

// Exact-arithmetic toolkit for holomorphic projective connections on
// surfaces: second-order differential elements and their pseudogroup action,
// complete joint rational invariants, centre-of-curvature loci, incidence
// geometry in Plücker/Grassmann coordinates, osculating-plane envelopes, and
// the cubic-cone embedding. Everything is computed over the rationals with
// zero-tolerance equality.

#include "projconn/exact/error.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/forms.hpp"
#include "projconn/exact/implicitize.hpp"
#include "projconn/jet/jet.hpp"
#include "projconn/invariants/invariants.hpp"
#include "projconn/connection/connection.hpp"
#include "projconn/osculating/models.hpp"
#include "projconn/osculating/incidence.hpp"
#include "projconn/osculating/envelope.hpp"
#include "projconn/cone/cone.hpp"
#include "projconn/errata.hpp"
