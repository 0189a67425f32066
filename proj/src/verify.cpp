#include "bsdist/verify.hpp"

#include "bsdist/budget.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bsdist/demazure.hpp"
#include "bsdist/hecke.hpp"
#include "bsdist/perm.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

SweepReport verify_longest(int n) {
  if (n < 1) throw std::invalid_argument("verify_longest: n must be positive");
  if (n > 5) throw BudgetExceeded("verify_longest: enumeration budget ends at n = 5");

  SweepReport report;
  report.n = n;
  Perm w0 = Perm::longest(n);
  std::vector<Word> words = reduced_words(w0);
  report.reduced_words = static_cast<long>(words.size());

  std::vector<HeckeElt> fs;
  std::vector<std::string> fkeys, ckeys;
  std::vector<TripleStat> stats;
  fs.reserve(words.size());
  std::unordered_map<std::string, size_t> index_of;
  for (size_t k = 0; k < words.size(); ++k) {
    fs.push_back(f_of_word(words[k]));
    fkeys.push_back(fs.back().canonical_key());
    ckeys.push_back(class_key_str(words[k]));
    stats.push_back(triple_stats(words[k]));
    index_of[words[k].str()] = k;
  }

  // Partition of Red(w0) by F(R) versus partition by commutation class.
  {
    std::map<std::string, std::set<std::string>> f_to_c, c_to_f;
    for (size_t k = 0; k < words.size(); ++k) {
      f_to_c[fkeys[k]].insert(ckeys[k]);
      c_to_f[ckeys[k]].insert(fkeys[k]);
    }
    report.classes = static_cast<long>(c_to_f.size());
    bool pass = f_to_c.size() == c_to_f.size();
    for (const auto& [key, group] : f_to_c) pass = pass && group.size() == 1;
    for (const auto& [key, group] : c_to_f) pass = pass && group.size() == 1;
    std::ostringstream os;
    os << words.size() << " reduced words, " << c_to_f.size() << " commutation classes, "
       << f_to_c.size() << " distinct distributions";
    report.checks.push_back({"main_theorem_partition", pass, os.str()});
  }

  // Theta_R + T_R = 0 for every word and triple.
  {
    bool pass = true;
    long tested = 0;
    for (size_t k = 0; k < words.size(); ++k) {
      auto th = theta_from(fs[k]);
      for (const auto& tr : triple_order(n)) {
        pass = pass && th.at(tr) + stats[k].tvals.at(tr) == 0;
        ++tested;
      }
    }
    std::ostringstream os;
    os << tested << " (word, triple) pairs";
    report.checks.push_back({"theta_plus_t_zero", pass, os.str()});
  }

  // Braid-edge laws; each edge is visited once from its i(i+1)i side.
  {
    bool digit_pass = true, flip_pass = true, transport_pass = true, cycle_pass = true,
         interval_pass = true;
    long edges = 0;
    std::vector<std::optional<std::map<Perm, long>>> dcache(words.size());
    auto dvals = [&](size_t k) -> const std::map<Perm, long>& {
      if (!dcache[k]) dcache[k] = d_table_from(fs[k]);
      return *dcache[k];
    };
    for (size_t k = 0; k < words.size(); ++k) {
      const Word& r1 = words[k];
      for (int t = 1; t + 2 <= r1.size(); ++t) {
        int i = r1.letter(t);
        if (!(r1.letter(t + 1) == i + 1 && r1.letter(t + 2) == i)) continue;
        ++edges;
        Word r2 = r1.with_window(t, i + 1, i, i + 1);
        size_t j = index_of.at(r2.str());

        digit_pass = digit_pass && std::abs(digit_sum(r1) - digit_sum(r2)) == 1;

        // The braid block inverts (a,b), (a,c), (b,c) in that order on the
        // i(i+1)i side, so T_{r1}(a,b,c) = +1 and T_{r2}(a,b,c) = -1.
        Word t1 = r1.prefix(t - 1);
        Word t2 = r1.suffix_from(t + 3);
        Perm u = product(t1);
        std::array<int, 3> abc{u(i), u(i + 1), u(i + 2)};
        int flips = 0;
        for (const auto& tr : triple_order(n))
          if (stats[k].tvals.at(tr) != stats[j].tvals.at(tr)) ++flips;
        flip_pass = flip_pass && flips == 1 && stats[k].tvals.at(abc) == 1 &&
                    stats[j].tvals.at(abc) == -1;

        Perm v1 = dem_word(t1.concat(Word(n, {i})).concat(t2));
        Perm v2 = dem_word(t1.concat(Word(n, {i + 1})).concat(t2));

        // D transport: D_{r1} - D_{r2} = +1 at v1, -1 at v2, 0 elsewhere.
        {
          std::map<Perm, long> diff;
          for (const auto& [x, d] : dvals(k)) diff[x] += d;
          for (const auto& [x, d] : dvals(j)) diff[x] -= d;
          std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
          std::map<Perm, long> expected{{v1, 1}, {v2, -1}};
          transport_pass = transport_pass && diff == expected;
        }

        // Cycle prediction: w0 = sigma v1 with the predicted sigma.
        BraidShortening pred = predict_braid_shortening(t1, i, t2);
        cycle_pass = cycle_pass && pred.v1 == v1 && pred.sigma.compose(pred.v1) == w0;

        // Support interval and forward sets of the two shortenings.
        FwdBwd f1 = fwd_bwd(v1), f2 = fwd_bwd(v2);
        std::set<int> f2b = f2.fwd;
        f2b.insert(abc[1]);
        interval_pass = interval_pass && f1.supp_is_interval(abc[0], abc[2]) &&
                        f2.supp_is_interval(abc[0], abc[2]) && f1.fwd == f2b &&
                        !f2.fwd.count(abc[1]) && v1 != v2;
      }
    }
    report.braid_edges = edges;
    std::ostringstream os;
    os << edges << " braid edges";
    report.checks.push_back({"braid_digit_sum", digit_pass, os.str()});
    report.checks.push_back({"braid_t_flip", flip_pass, os.str()});
    report.checks.push_back({"braid_d_transport", transport_pass, os.str()});
    report.checks.push_back({"braid_cycle_prediction", cycle_pass, os.str()});
    report.checks.push_back({"braid_support_interval", interval_pass, os.str()});
  }

  return report;
}

CollisionReport search_collisions(int n, const Rational& q0) {
  if (n < 1) throw std::invalid_argument("search_collisions: n must be positive");
  if (n > 5) throw BudgetExceeded("search_collisions: enumeration budget ends at n = 5");
  if (q0 == -1) throw std::invalid_argument("search_collisions: q = -1 makes the denominator vanish");

  CollisionReport report;
  report.n = n;
  {
    std::ostringstream os;
    os << q0;
    report.q0 = os.str();
  }
  std::vector<Word> words = reduced_words(Perm::longest(n));
  report.reduced_words = static_cast<long>(words.size());

  struct Group {
    // class key -> lexicographically least member of the class in this group
    std::map<std::string, std::string> classes;
  };
  std::map<std::string, Group> groups;
  std::set<std::string> all_class_keys;
  for (const Word& r : words) {
    Distribution d = wt_table(r);
    std::ostringstream os;
    for (const auto& [x, numerator] : d.numerators)
      os << x.str() << "=" << numerator.eval_q(q0) << ";";
    std::string ck = class_key_str(r);
    all_class_keys.insert(ck);
    auto& group = groups[os.str()];
    auto [it, inserted] = group.classes.emplace(ck, r.str());
    if (!inserted && r.str() < it->second) it->second = r.str();
  }
  report.classes = static_cast<long>(all_class_keys.size());
  report.value_groups = static_cast<long>(groups.size());
  for (const auto& [key, group] : groups) {
    if (group.classes.size() < 2) continue;
    std::vector<std::string> members;
    for (const auto& [ck, word] : group.classes) members.push_back(word);
    std::sort(members.begin(), members.end());
    report.collision_groups.push_back(std::move(members));
  }
  std::sort(report.collision_groups.begin(), report.collision_groups.end());
  return report;
}

}  // namespace bsdist
