#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "bsdist/budget.hpp"
#include "bsdist/cellrep.hpp"
#include "bsdist/demazure.hpp"
#include "bsdist/export.hpp"
#include "bsdist/hecke.hpp"
#include "bsdist/laurent.hpp"
#include "bsdist/oracle.hpp"
#include "bsdist/perm.hpp"
#include "bsdist/tl.hpp"
#include "bsdist/verify.hpp"
#include "bsdist/word.hpp"

namespace {

using bsdist::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 2;
constexpr int kExitConfig = 3;
constexpr int kExitBudget = 4;

struct Output {
  std::string path;   // empty = stdout
  bool pretty = false;
  std::ostringstream pretty_text;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--out", path, "Write output to this file instead of stdout");
    cmd->add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  }

  void emit_text(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output path '" + path + "'");
    os << text;
    if (!os) throw std::invalid_argument("failed writing output path '" + path + "'");
  }

  void emit(const json& payload) const {
    emit_text(pretty ? pretty_text.str() : payload.dump() + "\n");
  }
};

std::vector<int> lenient_letters(const std::string& text) {
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad word letter '" + tok + "'");
      letters.push_back(x);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("word digit strings must use digits 1-9; use commas otherwise");
      letters.push_back(ch - '0');
    }
  }
  return letters;
}

int inferred_rank(const std::vector<int>& letters) {
  int top = 0;
  for (int x : letters) top = std::max(top, x);
  return top + 1;
}

bsdist::Word parse_word(const std::string& text, std::optional<int> n) {
  if (n) return bsdist::Word::parse(text, *n);
  std::vector<int> letters = lenient_letters(text);
  int rank = std::max(1, inferred_rank(letters));
  return bsdist::Word(rank, std::move(letters));
}

std::pair<bsdist::Word, bsdist::Word> parse_word_pair(const std::string& t1, const std::string& t2,
                                                      std::optional<int> n) {
  if (n) return {bsdist::Word::parse(t1, *n), bsdist::Word::parse(t2, *n)};
  std::vector<int> l1 = lenient_letters(t1), l2 = lenient_letters(t2);
  int rank = std::max({1, inferred_rank(l1), inferred_rank(l2)});
  return {bsdist::Word(rank, std::move(l1)), bsdist::Word(rank, std::move(l2))};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_red_w0(const bsdist::Word& r) {
  if (!bsdist::is_reduced(r) || bsdist::product(r) != bsdist::Perm::longest(r.n()))
    throw std::invalid_argument("word '" + r.str() + "' is not a reduced word of the longest element");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bsdist;

  CLI::App app{"Exact Bott-Samelson distributions on S_n and their commutation-class invariants"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // ---- dist ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dist", "Weight table of a word: numerators over (1+q)^L");
    auto word_text = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("word", *word_text, "Word over 1..n-1 (digits, or comma-separated)")->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n");
    out->add_flags(cmd);
    cmd->callback([=]() {
      Word r = parse_word(*word_text, *n_opt);
      Distribution d = wt_table(r);
      json payload = distribution_json(d);
      payload["word"] = r.str();
      if (out->pretty) {
        out->pretty_text << "P_{R,q} for R = " << r.str() << " (n = " << d.n << ", denominator (1+q)^"
                         << d.L << ")\n";
        for (const auto& entry : payload["entries"]) {
          std::string perm_text = entry["perm"].get<std::string>();
          out->pretty_text << "  " << perm_text << "  "
                           << d.numerators.at(Perm::parse(perm_text)).str_q() << "\n";
        }
      }
      out->emit(payload);
    });
  }

  // ---- compare -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("compare", "Compare two words across every invariant");
    auto t1 = std::make_shared<std::string>(), t2 = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("word1", *t1)->required();
    cmd->add_option("word2", *t2)->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n");
    out->add_flags(cmd);
    cmd->callback([=]() {
      auto [r1, r2] = parse_word_pair(*t1, *t2, *n_opt);
      json payload;
      payload["n"] = r1.n();
      payload["words"] = json::array({r1.str(), r2.str()});
      payload["same_class"] = class_key(r1) == class_key(r2);
      auto witness = distribution_witness(r1, r2);
      payload["distributions_equal"] = !witness.has_value();
      payload["witness"] = witness ? json(witness->str()) : json(nullptr);
      payload["same_tl"] = tl_equal(r1, r2);
      payload["same_kernel_set"] =
          r1.n() >= 3 ? json(kernel_indices(r1) == kernel_indices(r2)) : json(nullptr);
      if (out->pretty) {
        out->pretty_text << "compare " << r1.str() << " vs " << r2.str() << " (n = " << r1.n()
                         << ")\n"
                         << "  same commutation class : " << payload["same_class"] << "\n"
                         << "  equal distributions    : " << payload["distributions_equal"] << "\n"
                         << "  witness                : " << payload["witness"] << "\n"
                         << "  equal TL image         : " << payload["same_tl"] << "\n"
                         << "  equal kernel set       : " << payload["same_kernel_set"] << "\n";
      }
      out->emit(payload);
    });
  }

  // ---- classes -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("classes", "Commutation classes of Red(w)");
    auto perm_text = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("perm", *perm_text, "Permutation (defaults to the longest element of S_n)");
    cmd->add_option("--n", *n_opt, "Rank when no permutation is given");
    out->add_flags(cmd);
    cmd->callback([=]() {
      if (perm_text->empty() && !n_opt->has_value())
        throw std::invalid_argument("classes: give a permutation or --n");
      Perm w = perm_text->empty() ? Perm::longest(**n_opt) : Perm::parse(*perm_text);
      if (w.n() > 6) throw BudgetExceeded("classes: enumeration budget ends at n = 6");
      ClassGraph g = class_graph(w);
      json payload;
      payload["n"] = g.n;
      payload["perm"] = w.str();
      long words = 0;
      for (const auto& v : g.vertices) words += v.size;
      payload["reduced_words"] = words;
      json arr = json::array();
      for (const auto& v : g.vertices) {
        json vertex;
        vertex["canonical"] = v.canonical.str();
        vertex["size"] = v.size;
        vertex["digit_sum"] = v.digit_sum;
        if (!v.t_vector.empty()) vertex["T"] = v.t_vector;
        arr.push_back(std::move(vertex));
      }
      payload["classes"] = std::move(arr);
      if (out->pretty) {
        out->pretty_text << "Red(" << w.str() << "): " << words << " reduced words, "
                         << g.vertices.size() << " commutation classes\n";
        for (const auto& v : g.vertices)
          out->pretty_text << "  [" << v.canonical.str() << "]  size " << v.size << "  S = "
                           << v.digit_sum << "\n";
      }
      out->emit(payload);
    });
  }

  // ---- graph ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("graph", "Graph of commutation classes of w0");
    auto n = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<Output>();
    cmd->add_option("--n", *n, "Rank")->required();
    cmd->add_option("--format", *format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    out->add_flags(cmd);
    cmd->callback([=]() {
      if (*n > 5) throw BudgetExceeded("graph: enumeration budget ends at n = 5");
      ClassGraph g = class_graph(Perm::longest(*n));
      if (*format == "dot") {
        out->emit_text(graph_dot(g));
      } else {
        if (out->pretty)
          out->pretty_text << "G(w0) for n = " << g.n << ": " << g.vertices.size() << " classes, "
                           << g.edges.size() << " edges\n";
        out->emit(graph_json(g));
      }
    });
  }

  // ---- invariants ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("invariants", "tau, T, digit sum and Theta of a reduced word of w0");
    auto word_text = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("word", *word_text)->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n");
    out->add_flags(cmd);
    cmd->callback([=]() {
      Word r = parse_word(*word_text, *n_opt);
      require_red_w0(r);
      TripleStat st = triple_stats(r);
      auto th = theta_all(r);
      json payload;
      payload["n"] = r.n();
      payload["word"] = r.str();
      payload["digit_sum"] = digit_sum(r);
      json tau = json::array();
      for (const auto& pr : pair_order(r.n()))
        tau.push_back(json{{"pair", json::array({pr.first, pr.second})}, {"t", st.tau.at(pr)}});
      payload["tau"] = std::move(tau);
      json tvals = json::array(), thetas = json::array();
      bool sum_zero = true;
      for (const auto& tr : triple_order(r.n())) {
        json key = json::array({tr[0], tr[1], tr[2]});
        tvals.push_back(json{{"triple", key}, {"value", st.tvals.at(tr)}});
        thetas.push_back(json{{"triple", key}, {"value", th.at(tr)}});
        sum_zero = sum_zero && st.tvals.at(tr) + th.at(tr) == 0;
      }
      payload["T"] = std::move(tvals);
      payload["theta"] = std::move(thetas);
      payload["theta_plus_T_all_zero"] = sum_zero;
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "R = " << r.str() << "  (n = " << r.n() << ", S(R) = " << digit_sum(r) << ")\n";
        os << "  tau:";
        for (const auto& pr : pair_order(r.n()))
          os << "  (" << pr.first << "," << pr.second << ")=" << st.tau.at(pr);
        os << "\n  T / Theta per triple:\n";
        for (const auto& tr : triple_order(r.n()))
          os << "    (" << tr[0] << "," << tr[1] << "," << tr[2] << ")  T=" << std::showpos
             << st.tvals.at(tr) << "  Theta=" << th.at(tr) << std::noshowpos << "\n";
      }
      out->emit(payload);
    });
  }

  // ---- cells ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("cells", "Cell-representation matrix M(R) and its kernel indices");
    auto word_text = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("word", *word_text)->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n (at least 3)");
    out->add_flags(cmd);
    cmd->callback([=]() {
      Word r = parse_word(*word_text, *n_opt);
      if (r.n() < 3) throw std::invalid_argument("cells: rank must be at least 3");
      CellMatrix m = m_of_word(r);
      std::set<int> kernel = kernel_indices(r);
      json payload;
      payload["n"] = r.n();
      payload["word"] = r.str();
      // entries as ascending (v-exponent, coefficient) pairs
      json rows = json::array();
      for (int row = 1; row <= m.dim(); ++row) {
        json cols = json::array();
        for (int col = 1; col <= m.dim(); ++col) cols.push_back(laurent_v_pairs(m.entry(row, col)));
        rows.push_back(std::move(cols));
      }
      payload["matrix"] = std::move(rows);
      payload["kernel"] = std::vector<int>(kernel.begin(), kernel.end());
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "M(" << r.str() << ") over basis C_{w_1}..C_{w_" << m.dim() << "}:\n";
        for (int row = 1; row <= m.dim(); ++row) {
          os << "  [";
          for (int col = 1; col <= m.dim(); ++col)
            os << (col > 1 ? " | " : " ") << m.entry(row, col).str_v();
          os << " ]\n";
        }
        os << "kernel indices:";
        for (int t : kernel) os << " " << t;
        os << "\n";
      }
      out->emit(payload);
    });
  }

  // ---- tl-check ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("tl-check", "Temperley-Lieb image equality versus Hecke equality");
    auto t1 = std::make_shared<std::string>(), t2 = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<Output>();
    cmd->add_option("word1", *t1)->required();
    cmd->add_option("word2", *t2)->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n");
    out->add_flags(cmd);
    cmd->callback([=]() {
      auto [r1, r2] = parse_word_pair(*t1, *t2, *n_opt);
      bool tl = tl_equal(r1, r2);
      bool hecke = f_of_word(r1) == f_of_word(r2);
      json payload;
      payload["n"] = r1.n();
      payload["words"] = json::array({r1.str(), r2.str()});
      payload["tl_equal"] = tl;
      payload["hecke_equal"] = hecke;
      if (out->pretty)
        out->pretty_text << "TL image equal   : " << (tl ? "true" : "false") << "\n"
                         << "Hecke F(R) equal : " << (hecke ? "true" : "false") << "\n";
      out->emit(payload);
    });
  }

  // ---- oracle --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("oracle", "Finite-field point count versus the weight table");
    auto word_text = std::make_shared<std::string>();
    auto n_opt = std::make_shared<std::optional<int>>();
    auto p = std::make_shared<int>(2);
    auto budget = std::make_shared<long long>(kDefaultBudget);
    auto out = std::make_shared<Output>();
    cmd->add_option("word", *word_text)->required();
    cmd->add_option("--n", *n_opt, "Ambient rank n");
    cmd->add_option("--p", *p, "Prime modulus")->required();
    cmd->add_option("--budget", *budget, "Leaf budget for the enumeration");
    out->add_flags(cmd);
    cmd->callback([=, &exit_code]() {
      if (!is_prime(*p)) throw std::invalid_argument("oracle: --p must be prime");
      Word r = parse_word(*word_text, *n_opt);
      BSCount bs = count_bs(r, *p, *budget);
      bool match = verify_counts(r, *p, *budget);
      json payload;
      payload["R"] = r.str();
      payload["n"] = r.n();
      payload["p"] = *p;
      payload["total"] = bs.total();
      json counts = json::array();
      for (const auto& [x, c] : bs.counts)
        counts.push_back(json{{"perm", x.str()}, {"count", c}});
      payload["counts"] = std::move(counts);
      payload["hecke_match"] = match;
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "BS point count for R = " << r.str() << " over F_" << *p << " (total " << bs.total()
           << ")\n";
        for (const auto& [x, c] : bs.counts) os << "  " << x.str() << "  " << c << "\n";
        os << "matches weight table at q = " << *p << ": " << (match ? "yes" : "NO") << "\n";
      }
      out->emit(payload);
      if (!match) exit_code = kExitVerifyFail;
    });
  }

  // ---- verify --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "Full sweep of the theorem and supporting laws over Red(w0)");
    auto n = std::make_shared<int>(0);
    auto out = std::make_shared<Output>();
    cmd->add_option("--n", *n, "Rank (at most 5)")->required();
    out->add_flags(cmd);
    cmd->callback([=, &exit_code]() {
      SweepReport report = verify_longest(*n);
      json payload;
      payload["n"] = report.n;
      payload["reduced_words"] = report.reduced_words;
      payload["classes"] = report.classes;
      payload["braid_edges"] = report.braid_edges;
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      payload["checks"] = std::move(checks);
      payload["pass"] = report.all_pass();
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "verify n = " << report.n << ": " << report.reduced_words << " reduced words, "
           << report.classes << " classes, " << report.braid_edges << " braid edges\n";
        for (const auto& c : report.checks)
          os << "  " << (c.pass ? "[ok]  " : "[FAIL]") << " " << c.name << "  (" << c.detail
             << ")\n";
      }
      out->emit(payload);
      if (!report.all_pass()) exit_code = kExitVerifyFail;
    });
  }

  // ---- search-collisions ----------------------------------------------
  {
    auto* cmd = app.add_subcommand("search-collisions",
                                   "Group Red(w0) by the distribution evaluated at a fixed q");
    auto n = std::make_shared<int>(0);
    auto q_text = std::make_shared<std::string>("1");
    auto out = std::make_shared<Output>();
    cmd->add_option("--n", *n, "Rank (at most 5)")->required();
    cmd->add_option("--q", *q_text, "Fixed rational value of q, e.g. 1 or 2/3");
    out->add_flags(cmd);
    cmd->callback([=]() {
      Rational q0;
      try {
        q0 = Rational(*q_text);
      } catch (const std::exception&) {
        throw std::invalid_argument("search-collisions: cannot parse --q value '" + *q_text + "'");
      }
      CollisionReport report = search_collisions(*n, q0);
      json payload;
      payload["n"] = report.n;
      payload["q"] = report.q0;
      payload["reduced_words"] = report.reduced_words;
      payload["classes"] = report.classes;
      payload["value_groups"] = report.value_groups;
      payload["groups_with_multiple_classes"] = report.collision_groups;
      payload["collision_found"] = report.collision_found();
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "q = " << report.q0 << ": " << report.reduced_words << " words, " << report.classes
           << " classes, " << report.value_groups << " distinct value vectors\n";
        if (report.collision_found()) {
          os << "collisions between distinct classes:\n";
          for (const auto& group : report.collision_groups) {
            os << " ";
            for (const auto& wtext : group) os << " " << wtext;
            os << "\n";
          }
        } else {
          os << "no two distinct classes share a value vector in this range\n";
        }
      }
      out->emit(payload);
    });
  }

  // ---- rs -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("rs", "Robinson-Schensted insertion and recording tableaux");
    auto perm_text = std::make_shared<std::string>();
    auto out = std::make_shared<Output>();
    cmd->add_option("perm", *perm_text)->required();
    out->add_flags(cmd);
    cmd->callback([=]() {
      Perm w = Perm::parse(*perm_text);
      auto [p_tab, q_tab] = rs_pair(w);
      json payload;
      payload["perm"] = w.str();
      payload["P"] = tableau_json(p_tab);
      payload["Q"] = tableau_json(q_tab);
      if (out->pretty) {
        auto& os = out->pretty_text;
        os << "w = " << w.str() << "\nP:\n";
        for (const auto& row : p_tab.rows) {
          for (int x : row) os << " " << x;
          os << "\n";
        }
        os << "Q:\n";
        for (const auto& row : q_tab.rows) {
          for (int x : row) os << " " << x;
          os << "\n";
        }
      }
      out->emit(payload);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const bsdist::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return exit_code;
}
