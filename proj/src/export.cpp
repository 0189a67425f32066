#include "bsdist/export.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace bsdist {

json int_to_json(const Int& v) {
  static const Int kMax = Int(std::numeric_limits<int64_t>::max());
  static const Int kMin = Int(std::numeric_limits<int64_t>::min());
  if (v >= kMin && v <= kMax) return v.convert_to<int64_t>();
  return v.str();
}

json laurent_v_pairs(const Laurent& p) {
  json out = json::array();
  for (int e = p.low(); e <= p.high(); ++e) {
    Int c = p.coeff_v(e);
    if (c != 0) out.push_back(json::array({e, int_to_json(c)}));
  }
  return out;
}

json q_coeff_array(const Laurent& p) {
  json out = json::array();
  for (const Int& c : p.q_coeffs()) out.push_back(int_to_json(c));
  return out;
}

json distribution_json(const Distribution& d) {
  std::vector<const std::pair<const Perm, Laurent>*> entries;
  for (const auto& kv : d.numerators) entries.push_back(&kv);
  std::stable_sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
    int la = a->first.length(), lb = b->first.length();
    return la != lb ? la < lb : a->first < b->first;
  });
  json out;
  out["n"] = d.n;
  out["L"] = d.L;
  json arr = json::array();
  for (const auto* kv : entries) {
    json entry;
    entry["perm"] = kv->first.str();
    entry["numerator_q_coeffs"] = q_coeff_array(kv->second);
    arr.push_back(std::move(entry));
  }
  out["entries"] = std::move(arr);
  return out;
}

json tableau_json(const Tableau& t) {
  json out = json::array();
  for (const auto& row : t.rows) out.push_back(row);
  return out;
}

json graph_json(const ClassGraph& g) {
  json out;
  out["n"] = g.n;
  out["perm"] = g.w.str();
  json verts = json::array();
  for (const auto& v : g.vertices) {
    json vertex;
    vertex["canonical"] = v.canonical.str();
    vertex["size"] = v.size;
    vertex["digit_sum"] = v.digit_sum;
    if (!v.t_vector.empty()) vertex["T"] = v.t_vector;
    verts.push_back(std::move(vertex));
  }
  out["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.first, e.second}));
  out["edges"] = std::move(edges);
  return out;
}

std::string graph_dot(const ClassGraph& g) {
  std::ostringstream os;
  os << "graph classes {\n";
  for (size_t k = 0; k < g.vertices.size(); ++k) {
    const auto& v = g.vertices[k];
    os << "  c" << k << " [label=\"" << v.canonical.str() << "\\nS=" << v.digit_sum;
    if (!v.t_vector.empty()) {
      os << "\\nT=";
      for (int t : v.t_vector) os << (t > 0 ? '+' : '-');
    }
    os << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  c" << e.first << " -- c" << e.second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bsdist
