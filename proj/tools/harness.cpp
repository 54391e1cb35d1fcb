#include "harness.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "capelli/gln.hpp"
#include "capelli/highest_weight.hpp"
#include "capelli/shifted_schur.hpp"
#include "capelli/young_reps.hpp"

namespace capelli::harness {

namespace {

using Params = std::map<std::string, std::string>;

std::vector<Partition> shapes_of_size(int k, const SuiteOptions& o) {
  if (o.mu) return o.mu->size() == k ? std::vector<Partition>{*o.mu} : std::vector<Partition>{};
  return enumerate_partitions(k);
}

// Sizes 1..max_k, or just --k / |--mu| when given.
std::vector<int> sizes(int default_min, int default_max, const SuiteOptions& o) {
  if (o.mu) return {o.mu->size()};
  if (o.k) return {*o.k};
  std::vector<int> out;
  for (int k = default_min; k <= default_max; ++k) out.push_back(k);
  return out;
}

std::vector<int> values_or(const std::optional<int>& given, std::vector<int> fallback) {
  return given ? std::vector<int>{*given} : fallback;
}

Outcome check_jm(const Partition& mu) {
  const SeminormalRep& rep = cached_rep(mu);
  for (int i = 1; i <= mu.size(); ++i) {
    RationalMatrix x = apply_element(rep, jucys_murphy(i, mu.size()));
    for (std::size_t r = 0; r < rep.dim(); ++r)
      for (std::size_t c = 0; c < rep.dim(); ++c) {
        Rational expected = r == c ? Rational(content_vector(rep.basis()[r])[i - 1]) : Rational(0);
        if (x(r, c) != expected)
          return Outcome::fail("X_" + std::to_string(i) + " entry (" + rep.basis()[r].to_string() + ", " +
                               rep.basis()[c].to_string() + ") = " + capelli::to_string(x(r, c)) + ", expected " +
                               capelli::to_string(expected));
      }
  }
  return Outcome::pass();
}

Outcome check_rep_relations(const Partition& mu) {
  const SeminormalRep& rep = cached_rep(mu);
  const int k = mu.size();
  RationalMatrix id = RationalMatrix::identity(rep.dim());
  for (int i = 1; i < k; ++i) {
    const RationalMatrix& a = rep.generator(i);
    if (!(a * a == id)) return Outcome::fail("R(s_" + std::to_string(i) + ")^2 != I");
    if (i + 1 < k) {
      const RationalMatrix& b = rep.generator(i + 1);
      if (!(a * b * a == b * a * b)) return Outcome::fail("braid relation fails at i = " + std::to_string(i));
    }
    for (int j = i + 2; j < k; ++j)
      if (!(a * rep.generator(j) == rep.generator(j) * a))
        return Outcome::fail("R(s_" + std::to_string(i) + ") and R(s_" + std::to_string(j) + ") do not commute");
  }
  Rational scalar = 0;
  for (int i = 1; i <= mu.length(); ++i) {
    int e = mu.row_length(i);
    scalar += ratio(e * e - (2 * i - 1) * e, 2);
  }
  if (k > 0 && !(apply_element(rep, sigma_p(k, k)) == scalar * id))
    return Outcome::fail("Sigma_k does not act by " + capelli::to_string(scalar));
  return Outcome::pass();
}

Outcome check_matrix_elements(const Partition& mu) {
  const SeminormalRep& rep = cached_rep(mu);
  const int k = mu.size();
  Rational scale = ratio(static_cast<long>(factorial(k)), static_cast<long>(rep.dim()));
  for (const auto& t : rep.basis())
    for (const auto& tp : rep.basis()) {
      GroupAlgebraElement psi = psi_element(t, tp);
      auto ct = content_vector(t);
      auto ctp = content_vector(tp);
      std::string pair = "(" + t.to_string() + ", " + tp.to_string() + ")";
      for (int i = 1; i <= k; ++i) {
        GroupAlgebraElement x = jucys_murphy(i, k);
        if (!(x * psi == Rational(ct[i - 1]) * psi)) return Outcome::fail("X_" + std::to_string(i) + " Psi" + pair);
        if (!(psi * x == Rational(ctp[i - 1]) * psi)) return Outcome::fail("Psi" + pair + " X_" + std::to_string(i));
      }
      if (!(apply_element(rep, psi) == scale * RationalMatrix::unit(rep.dim(), rep.index_of(t), rep.index_of(tp))))
        return Outcome::fail("Psi" + pair + " is not a multiple of the matrix unit");
    }
  return Outcome::pass();
}

const std::vector<Generator>& wick_alphabet() {
  static const std::vector<Generator> a{{Generator::Kind::x, {1, 1}},
                                        {Generator::Kind::d, {1, 1}},
                                        {Generator::Kind::x, {1, 2}},
                                        {Generator::Kind::d, {2, 1}}};
  return a;
}

std::string word_to_string(const std::vector<Generator>& w) {
  std::string s;
  for (const auto& g : w)
    s += std::string(g.kind == Generator::Kind::x ? "x" : "d") + "[" + std::to_string(g.var.row) + "," +
         std::to_string(g.var.col) + "]";
  return s.empty() ? "()" : s;
}

Outcome check_wick(int len) {
  const Ambient amb{2, 2};
  const auto& alphabet = wick_alphabet();
  std::vector<int> idx(len, 0);
  while (true) {
    std::vector<Generator> word;
    for (int i : idx) word.push_back(alphabet[i]);
    if (!(wick_expand(word, amb) == fold_multiply(word, amb))) return Outcome::fail("word " + word_to_string(word));
    int p = len - 1;
    while (p >= 0 && idx[p] == static_cast<int>(alphabet.size()) - 1) idx[p--] = 0;
    if (p < 0) return Outcome::pass();
    ++idx[p];
  }
}

std::string eword_to_string(const EWord& w) {
  std::string s;
  for (const auto& [i, j] : w) s += "E" + std::to_string(i) + std::to_string(j);
  return s.empty() ? "()" : s;
}

Outcome check_olshanski(int len, int n, int m) {
  std::vector<int> t(2 * len, 1);
  while (true) {
    EWord w;
    for (int p = 0; p < len; ++p) w.emplace_back(t[2 * p], t[2 * p + 1]);
    WeylOperator lhs = olshanski_expand(w, n, m);
    WeylOperator rhs = e_word_product(w, n, m);
    if (!(lhs == rhs)) return Outcome::fail("word " + eword_to_string(w) + ": difference " + (lhs - rhs).to_string());
    int p = 2 * len - 1;
    while (p >= 0 && t[p] == n) t[p--] = 1;
    if (p < 0) return Outcome::pass();
    ++t[p];
  }
}

Outcome check_projector_fusion(const Partition& mu, int n, int m) {
  auto ts = standard_tableaux(mu);
  for (const auto& t1 : ts)
    for (const auto& t2 : ts)
      for (const auto& t3 : ts)
        for (const auto& t4 : ts) {
          Outcome o = projector_fusion(t1, t2, t3, t4, n, m);
          if (!o)
            return Outcome::fail("(" + t1.to_string() + ", " + t2.to_string() + ", " + t3.to_string() + ", " +
                                 t4.to_string() + "): " + o.witness);
        }
  return Outcome::pass();
}

Outcome check_independence(int max_k, int n, int m) {
  IndependenceReport r = independence_check(max_k, n, m);
  if (!r.outcome) return r.outcome;
  if (!r.nonvanishing.empty()) {
    std::string names;
    for (const auto& mu : r.nonvanishing) names += " (" + mu.to_string() + ")";
    return Outcome::fail("immanants with more than n rows do not vanish:" + names);
  }
  return Outcome::pass();
}

Outcome check_eigenvalue(const Partition& mu, const Partition& lambda, int n, int m) {
  EigenvalueReport r = verify_eigenvalue(mu, lambda, n, m);
  return r.outcome;
}

Params shape_params(const Partition& mu, int n, int m) {
  return {{"mu", mu.to_string()}, {"n", std::to_string(n)}, {"m", std::to_string(m)}};
}

void plan_main(const SuiteOptions& o, std::vector<Check>& out) {
  auto ns = values_or(o.n, {1, 2, 3});
  auto ms_for = [&](int) { return values_or(o.m, {1, 2, 3}); };
  auto add = [&](const StandardTableau& t, const StandardTableau& tp, int n, int m, bool optional) {
    Params p = shape_params(t.shape(), n, m);
    p["tableau"] = t.to_string();
    p["tableau2"] = tp.to_string();
    out.push_back({"main", p, [t, tp, n, m] { return verify_main_theorem(t, tp, n, m); }, optional});
  };
  if (o.tableau) {
    StandardTableau tp = o.tableau2 ? *o.tableau2 : *o.tableau;
    if (tp.shape() != o.tableau->shape()) throw std::invalid_argument("--tableau and --tableau2 have different shapes");
    for (int n : ns)
      for (int m : ms_for(n)) add(*o.tableau, tp, n, m, false);
    return;
  }
  for (int k : sizes(1, 3, o))
    for (const auto& mu : shapes_of_size(k, o)) {
      auto ts = standard_tableaux(mu);
      for (int n : ns)
        for (int m : ms_for(n))
          for (const auto& t : ts)
            for (const auto& tp : ts) add(t, tp, n, m, k >= 4);
    }
  if (!o.mu && !o.k && !o.n && !o.m) {
    for (const auto& mu : enumerate_partitions(4))
      for (const auto& t : standard_tableaux(mu)) add(t, t, 2, 2, true);
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check_name"] = r.check_name;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jm",      "reps",        "symmetrizer",      "wick",
                                              "olshanski", "classical", "main",             "trace",
                                              "central", "ordered-sum", "projector-fusion", "independence",
                                              "characterization", "eigenvalue", "all"};
  return names;
}

std::vector<Check> plan_suite(const std::string& suite, const SuiteOptions& o) {
  std::vector<Check> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = plan_suite(name, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "jm") {
    for (int k : sizes(1, 6, o))
      for (const auto& mu : shapes_of_size(k, o))
        out.push_back({"jm", {{"mu", mu.to_string()}}, [mu] { return check_jm(mu); }});
  } else if (suite == "reps") {
    for (int k : sizes(1, 6, o))
      for (const auto& mu : shapes_of_size(k, o)) {
        out.push_back({"reps", {{"mu", mu.to_string()}}, [mu] { return check_rep_relations(mu); }});
        if (k <= 4 || o.mu || o.k)
          out.push_back({"matrix_elements", {{"mu", mu.to_string()}}, [mu] { return check_matrix_elements(mu); }});
      }
  } else if (suite == "symmetrizer") {
    for (int k : sizes(1, 4, o))
      for (const auto& mu : shapes_of_size(k, o))
        out.push_back({"symmetrizer", {{"mu", mu.to_string()}}, [mu] { return verify_young_symmetrizer(mu); }});
  } else if (suite == "wick") {
    for (int len : sizes(0, 4, o))
      out.push_back({"wick", {{"length", std::to_string(len)}, {"n", "2"}, {"m", "2"}}, [len] { return check_wick(len); }});
  } else if (suite == "olshanski") {
    int n = o.n.value_or(2), m = o.m.value_or(2);
    for (int len : sizes(0, 3, o))
      out.push_back({"olshanski",
                     {{"length", std::to_string(len)}, {"n", std::to_string(n)}, {"m", std::to_string(m)}},
                     [len, n, m] { return check_olshanski(len, n, m); }});
    if (!o.k && !o.n && !o.m)
      out.push_back({"olshanski", {{"length", "6"}, {"n", "2"}, {"m", "2"}}, [] { return check_olshanski(6, 2, 2); },
                     true});
  } else if (suite == "classical") {
    for (int n : values_or(o.n, {2, 3}))
      for (int m : values_or(o.m, {n, n + 1}))
        for (int k : o.k ? std::vector<int>{*o.k} : sizes(1, n, {})) {
          if (k > n || m < n)
            throw std::invalid_argument("classical Capelli identity requires 1 <= k <= n <= m");
          out.push_back({"classical",
                         {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"k", std::to_string(k)}},
                         [n, m, k] { return classical_capelli(n, m, k); }});
        }
  } else if (suite == "main") {
    plan_main(o, out);
  } else if (suite == "trace" || suite == "central") {
    for (int n : values_or(o.n, {2, 3})) {
      int m = o.m.value_or(n);
      for (int k : sizes(0, 3, o))
        for (const auto& mu : shapes_of_size(k, o)) {
          if (suite == "trace")
            out.push_back({"trace", shape_params(mu, n, m), [mu, n, m] { return trace_identity(mu, n, m); }});
          else
            out.push_back({"central", shape_params(mu, n, m),
                           [mu, n, m] { return verify_central(quantum_immanant(mu, n, m), n, m); }});
        }
    }
  } else if (suite == "ordered-sum") {
    int n = o.n.value_or(2), m = o.m.value_or(2);
    for (int k : sizes(1, 3, o))
      for (const auto& mu : shapes_of_size(k, o))
        out.push_back({"ordered-sum", shape_params(mu, n, m), [mu, n, m] { return ordered_sum_theorem(mu, n, m); }});
  } else if (suite == "projector-fusion") {
    int n = o.n.value_or(2), m = o.m.value_or(2);
    std::vector<Partition> shapes = o.mu ? std::vector<Partition>{*o.mu}
                                         : std::vector<Partition>{Partition({2}), Partition({1, 1}), Partition({2, 1})};
    for (const auto& mu : shapes)
      out.push_back(
          {"projector-fusion", shape_params(mu, n, m), [mu, n, m] { return check_projector_fusion(mu, n, m); }});
  } else if (suite == "independence") {
    int n = o.n.value_or(2), m = o.m.value_or(n);
    int max_k = o.k.value_or(3);
    out.push_back({"independence", {{"max_k", std::to_string(max_k)}, {"n", std::to_string(n)}, {"m", std::to_string(m)}},
                   [max_k, n, m] { return check_independence(max_k, n, m); }});
  } else if (suite == "characterization") {
    for (int n : values_or(o.n, {1, 2, 3}))
      for (int k : sizes(0, 4, o))
        for (const auto& mu : shapes_of_size(k, o)) {
          if (mu.length() > n) {
            if (o.mu && o.n) throw std::invalid_argument("partition has more rows than n");
            continue;
          }
          out.push_back({"characterization", {{"mu", mu.to_string()}, {"n", std::to_string(n)}},
                         [mu, n] { return verify_characterization(mu, n); }});
        }
  } else if (suite == "eigenvalue") {
    for (int n : values_or(o.n, {2, 3})) {
      int m = o.m.value_or(n);
      std::vector<Partition> lambdas = o.lambda ? std::vector<Partition>{*o.lambda} : partitions_up_to(4, n);
      for (int k : sizes(0, 3, o))
        for (const auto& mu : shapes_of_size(k, o)) {
          if (mu.length() > n) {
            if (o.mu && o.n) throw std::invalid_argument("partition has more rows than n");
            continue;
          }
          for (const auto& lam : lambdas) {
            if (lam.length() > std::min(n, m)) {
              if (o.lambda) throw std::invalid_argument("weight has more rows than min(n, m)");
              continue;
            }
            Params p = shape_params(mu, n, m);
            p["lambda"] = lam.to_string();
            out.push_back({"eigenvalue", p, [mu, lam, n, m] { return check_eigenvalue(mu, lam, n, m); }});
          }
        }
    }
  } else {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
  return out;
}

RunSummary run_checks(const std::vector<Check>& checks, int jobs, bool sorted, double budget_seconds,
                      std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::vector<std::optional<CheckReport>> results(checks.size());
  std::atomic<std::size_t> next{0};
  std::mutex out_mutex;
  RunSummary summary;

  auto worker = [&] {
    while (true) {
      std::size_t i = next++;
      if (i >= checks.size()) return;
      const Check& c = checks[i];
      CheckReport r{c.name, c.params};
      double elapsed = std::chrono::duration<double>(clock::now() - start).count();
      if (c.optional && elapsed > budget_seconds) {
        r.status = Status::skipped;
        r.witness = "budget of " + std::to_string(budget_seconds) + " s exhausted";
      } else {
        auto t0 = clock::now();
        try {
          Outcome o = c.run();
          r.status = o.passed ? Status::pass : Status::fail;
          if (!o.passed) r.witness = o.witness.empty() ? "check failed" : o.witness;
        } catch (const std::exception& e) {
          r.status = Status::fail;
          r.witness = std::string("exception: ") + e.what();
        }
        r.wall_time_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      }
      std::lock_guard lock(out_mutex);
      (r.status == Status::pass ? summary.passed : r.status == Status::fail ? summary.failed : summary.skipped)++;
      if (sorted)
        results[i] = std::move(r);
      else
        out << to_json(r).dump() << "\n" << std::flush;
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (sorted)
    for (const auto& r : results) out << to_json(*r).dump() << "\n";
  return summary;
}

namespace {

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(parse_rational(field));
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Capelli-type identities"};
  app.require_subcommand(1);

  std::string suite;
  std::optional<int> k, n, m;
  std::string mu_text, lambda_text, tableau_text, tableau2_text, eval_text;
  double budget = 600;
  int jobs = 1;
  bool sorted = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--k", k, "Degree or word length")->check(CLI::NonNegativeNumber);
  verify->add_option("--n", n, "Rows of the matrix space")->check(CLI::PositiveNumber);
  verify->add_option("--m", m, "Columns of the matrix space")->check(CLI::PositiveNumber);
  verify->add_option("--mu", mu_text, "Partition, e.g. 2,1");
  verify->add_option("--lambda", lambda_text, "Highest weight, e.g. 2,1");
  verify->add_option("--tableau", tableau_text, "Standard tableau, e.g. 1,2/3");
  verify->add_option("--tableau2", tableau2_text, "Second tableau");
  verify->add_option("--budget", budget, "Seconds before optional heavy cases are skipped")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--sorted", sorted, "Buffer reports and print them in plan order");

  auto* immanant = app.add_subcommand("immanant", "Print a quantum immanant in dump format");
  immanant->add_option("--mu", mu_text, "Partition")->required();
  immanant->add_option("--n", n, "Rows")->required()->check(CLI::PositiveNumber);
  immanant->add_option("--m", m, "Columns")->required()->check(CLI::PositiveNumber);

  auto* sschur = app.add_subcommand("sschur", "Print or evaluate a shifted Schur polynomial");
  sschur->add_option("--mu", mu_text, "Partition")->required();
  sschur->add_option("--n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
  sschur->add_option("--eval", eval_text, "Evaluation point, e.g. 2,1,0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*immanant) {
      Partition mu = parse_partition(mu_text);
      out << dump_operator(quantum_immanant(mu, *n, *m));
      return 0;
    }
    if (*sschur) {
      Partition mu = parse_partition(mu_text);
      MultiPolynomial s = shifted_schur(mu, *n);
      if (eval_text.empty()) {
        out << s.to_string() << "\n";
        return 0;
      }
      std::vector<Rational> point = parse_point(eval_text);
      if (static_cast<int>(point.size()) > *n) throw std::invalid_argument("evaluation point longer than n");
      point.resize(*n, Rational(0));
      out << capelli::to_string(s.evaluate(point)) << "\n";
      return 0;
    }

    SuiteOptions o;
    o.k = k;
    o.n = n;
    o.m = m;
    o.budget_seconds = budget;
    if (verify->count("--mu")) o.mu = parse_partition(mu_text);
    if (verify->count("--lambda")) o.lambda = parse_partition(lambda_text);
    if (verify->count("--tableau")) o.tableau = parse_tableau(tableau_text);
    if (verify->count("--tableau2")) o.tableau2 = parse_tableau(tableau2_text);
    if (o.tableau2 && !o.tableau) throw std::invalid_argument("--tableau2 requires --tableau");
    if (o.mu && o.tableau && o.tableau->shape() != *o.mu)
      throw std::invalid_argument("--tableau does not have shape --mu");
    if (o.n && o.n.value() * o.m.value_or(*o.n) > kMaxVariables)
      throw std::invalid_argument("n * m exceeds " + std::to_string(kMaxVariables));
    std::vector<Check> checks = plan_suite(suite, o);
    RunSummary s = run_checks(checks, jobs, sorted, budget, out);
    err << suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
    return s.failed == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace capelli::harness
