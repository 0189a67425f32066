#pragma once

#include <json.hpp>
#include <string>

#include "bsdist/hecke.hpp"
#include "bsdist/laurent.hpp"
#include "bsdist/perm.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

using json = nlohmann::json;

/// Exact integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
json int_to_json(const Int& v);

/// Ascending (v-exponent, coefficient) pairs.
json laurent_v_pairs(const Laurent& p);
/// Ascending q-coefficients starting at q^0; requires a polynomial in q.
json q_coeff_array(const Laurent& p);

/// { n, L, entries: [ { perm, numerator_q_coeffs } ] }, entries sorted by
/// (length, one-line order).
json distribution_json(const Distribution& d);

json tableau_json(const Tableau& t);

json graph_json(const ClassGraph& g);
std::string graph_dot(const ClassGraph& g);

}  // namespace bsdist
