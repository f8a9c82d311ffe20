#include "iex/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "iex/coding.hpp"
#include "iex/induction.hpp"
#include "iex/quadratic.hpp"
#include "iex/spec_file.hpp"

namespace iex {

namespace {

std::string render_iet(const Iet& T) {
  std::ostringstream out;
  out << "domain " << T.domain().str() << "\n";
  for (size_t i = 0; i < T.size(); ++i) {
    out << T.letter(i) << ": I=[" << T.gamma(i) << ", " << T.mu(i) << ")  J=[" << T.delta(i)
        << ", " << T.nu(i) << ")  alpha=" << T.alpha(i) << "\n";
  }
  return out.str();
}

std::vector<QuadNum> sample_points(const Iet& T, size_t count) {
  std::vector<QuadNum> pts;
  QuadNum span = T.right() - T.left();
  for (size_t k = 0; k < count; ++k) {
    pts.push_back(T.left() + span * QuadNum(make_rational(2 * static_cast<long>(k) + 1,
                                                          2 * static_cast<long>(count))));
  }
  return pts;
}

int verify_suites(const Iet& T, const std::string& only, std::ostream& out) {
  int failures = 0;
  auto suite = [&](const std::string& name, const std::function<std::string()>& body) {
    if (!only.empty() && only != name) return;
    try {
      out << "ok " << name << ": " << body() << "\n";
    } catch (const std::exception& e) {
      ++failures;
      out << "FAIL " << name << ": " << e.what() << "\n";
    }
  };

  suite("partition", [&] {
    QuadNum total(0);
    for (size_t i = 0; i < T.size(); ++i) {
      total = total + T.length(i);
      if (i + 1 < T.size() && T.mu(i) != T.gamma(i + 1))
        throw std::runtime_error("top boundaries do not chain");
      if (T.alpha(i) != T.delta(i) - T.gamma(i))
        throw std::runtime_error("translation values are inconsistent");
    }
    if (T.left() + total != T.right()) throw std::runtime_error("lengths do not sum to the span");
    return "boundaries chain and lengths tile the domain";
  });

  suite("bijectivity", [&] {
    for (const QuadNum& z : sample_points(T, 101)) {
      if (T.apply_inv(T.apply(z)) != z || T.apply(T.apply_inv(z)) != z)
        throw std::runtime_error("inverse failed at " + z.str());
    }
    return "apply and apply_inv invert each other on 101 sample points";
  });

  suite("conjugacy", [&] {
    for (const char* chi : {"R", "L", "RL", "RLL", "LLR"}) {
      ChiResult res = apply_chi(T, chi);
      for (const QuadNum& z : sample_points(res.iet, 5)) {
        Word inner = natural_coding(res.iet, z, 20);
        Word outer = natural_coding(T, z, 20);
        Word mapped = res.automorphism.apply(inner).substr(0, 20);
        if (outer.compare(0, mapped.size(), mapped) != 0)
          throw std::runtime_error(std::string("coding mismatch for chi=") + chi);
      }
    }
    return "codings factor through the step automorphisms";
  });

  suite("admissibility", [&] {
    FactorSet f = factors(T, 3);
    size_t checked = 0;
    for (const Word& w : f.all_nonempty()) {
      SemiInterval jw = *interval_J(T, w);
      if (!is_admissible(T, jw)) throw std::runtime_error("J_" + w + " is not admissible");
      chi_search(T, jw);
      ++checked;
    }
    return "all " + std::to_string(checked) + " word intervals pass both admissibility routes";
  });

  suite("graph", [&] {
    InductionGraph g = build_graph(T, CanonMode::similarity, 10000);
    auto [scaled, scale] = rescale_integral(T);
    QuadNum bound = QuadNum(1) / (QuadNum(4) * QuadNum::sqrt(scaled.radicand()));
    QuadNum factor{Rational(scale)};
    for (const Iet& witness : g.witnesses) {
      FiniteUnion dom(SemiInterval(witness.left() * factor, witness.right() * factor));
      if (!(bound < reduced_complexity(dom)))
        throw std::runtime_error("reduced complexity bound failed on " + dom.parts()[0].str());
    }
    return "similarity graph closes with " + std::to_string(g.vertices.size()) +
           " vertices and all domains respect the complexity bound";
  });

  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact interval exchange transformations"};
  app.require_subcommand(1);
  std::string spec_path;
  app.add_option("-s,--spec", spec_path, "IET spec file (JSON)")->required();

  std::string z_expr, word, chi_seq, u_expr, v_expr, dot_path, suite_name;
  long count = 0;
  size_t budget = 10000;
  size_t check_len = 0;
  bool left_side = false, modified = false;

  CLI::App* eval = app.add_subcommand("eval", "orbit points T^0(z) .. T^n(z)");
  eval->add_option("z", z_expr)->required();
  eval->add_option("n", count)->required();

  CLI::App* code = app.add_subcommand("code", "natural coding prefix of z");
  code->add_option("z", z_expr)->required();
  code->add_option("n", count)->required();

  CLI::App* fact = app.add_subcommand("factors", "factor words up to length n");
  fact->add_option("n", count)->required();

  CLI::App* rets = app.add_subcommand("returns", "first return words to w");
  rets->add_option("w", word)->required();
  rets->add_flag("--left", left_side, "left return words");

  CLI::App* derive = app.add_subcommand("derive", "derived language over return words to w");
  derive->add_option("w", word)->required();
  derive->add_option("n", count)->required();

  CLI::App* induce_cmd = app.add_subcommand("induce", "induced transformation");
  induce_cmd->add_option("--seq", chi_seq, "induction sequence over R/L");
  induce_cmd->add_option("--word", word, "induce on J_w");
  std::vector<std::string> interval_args;
  induce_cmd->add_option("--interval", interval_args, "induce on [u, v)")->expected(2);

  CLI::App* adm = app.add_subcommand("admissible", "test admissibility of [u, v)");
  adm->add_option("u", u_expr)->required();
  adm->add_option("v", v_expr)->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "induction graph as DOT");
  graph_cmd->add_flag("--modified", modified, "similarity classes instead of equivalence");
  graph_cmd->add_option("--dot", dot_path, "write DOT here instead of stdout");
  graph_cmd->add_option("--budget", budget, "vertex budget");

  CLI::App* morph = app.add_subcommand("morphism", "primitive substitution generating the language");
  morph->add_option("--max-len", check_len, "verify factors up to this length");

  CLI::App* euclid_cmd = app.add_subcommand("euclid", "continued fraction digits (2 letters)");
  euclid_cmd->add_option("n", count)->required();

  CLI::App* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", suite_name, "run a single suite by name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Iet T = load_iet_spec(spec_path);

    if (eval->parsed()) {
      QuadNum z = QuadNum::parse(z_expr);
      for (long k = 0; k <= count; ++k) out << k << "\t" << T.iterate(z, k) << "\n";
    } else if (code->parsed()) {
      out << natural_coding(T, QuadNum::parse(z_expr), static_cast<size_t>(count)) << "\n";
    } else if (fact->parsed()) {
      FactorSet f = factors(T, static_cast<size_t>(count));
      for (const Word& w : f.all_nonempty()) out << w << "\n";
    } else if (rets->parsed()) {
      std::vector<Word> words =
          return_words(T, word, left_side ? ReturnSide::left : ReturnSide::right);
      for (size_t i = 0; i < words.size(); ++i) out << (i ? " " : "") << words[i];
      out << "\n";
    } else if (derive->parsed()) {
      std::vector<Word> images = return_words(T, word, ReturnSide::right);
      Morphism f(T.order1(), images);
      out << "coding morphism: " << f.str() << "\n";
      FactorSet d = derived_set(T, word, f, static_cast<size_t>(count));
      for (const Word& w : d.all_nonempty()) out << w << "\n";
    } else if (induce_cmd->parsed()) {
      std::string chi;
      if (!chi_seq.empty()) {
        chi = chi_seq;
      } else if (!word.empty() || induce_cmd->count("--word") > 0) {
        auto jw = interval_J(T, word);
        if (!jw) throw WordNotInLanguage("'" + word + "' is not a factor");
        chi = chi_search(T, *jw);
      } else if (interval_args.size() == 2) {
        chi = chi_search(
            T, SemiInterval(QuadNum::parse(interval_args[0]), QuadNum::parse(interval_args[1])));
      } else {
        err << "error: induce needs --seq, --word or --interval\n";
        return 2;
      }
      ChiResult res = apply_chi(T, chi);
      out << "chi " << (chi.empty() ? "(empty)" : chi) << "\n";
      out << "automorphism: " << res.automorphism.str() << "\n";
      out << render_iet(res.iet);
    } else if (adm->parsed()) {
      SemiInterval I(QuadNum::parse(u_expr), QuadNum::parse(v_expr));
      if (auto w = admissibility_witness(T, I)) {
        err << "not admissible: " << w->reason << "\n";
        return static_cast<int>(errc::not_admissible);
      }
      out << "admissible (chi " << [&] {
        std::string chi = chi_search(T, I);
        return chi.empty() ? std::string("(empty)") : chi;
      }() << ")\n";
    } else if (graph_cmd->parsed()) {
      InductionGraph g =
          build_graph(T, modified ? CanonMode::similarity : CanonMode::equivalence, budget);
      std::string dot = emit_dot(g);
      if (dot_path.empty()) {
        out << dot;
      } else {
        std::ofstream file(dot_path);
        if (!file) throw ParseError("cannot write '" + dot_path + "'");
        file << dot;
        out << "vertices " << g.vertices.size() << " edges " << g.edges.size() << "\n";
      }
    } else if (morph->parsed()) {
      MorphicPresentation pres = extract_primitive_morphism(T);
      out << "path: " << pres.path.str() << "\n";
      out << "cycle: " << pres.cycle.str() << "\n";
      out << "seed: " << pres.seed << "\n";
      if (check_len > 0) {
        bool same = presentation_factors(pres, T.order1(), check_len) == factors(T, check_len);
        out << "factors match up to length " << check_len << ": " << (same ? "yes" : "NO")
            << "\n";
        if (!same) return 1;
      }
    } else if (euclid_cmd->parsed()) {
      EuclidResult res = euclid_digits(T, static_cast<size_t>(count));
      for (size_t i = 0; i < res.digits.size(); ++i) out << (i ? " " : "") << res.digits[i];
      out << "\n";
      if (res.exhausted) {
        err << "connection: rational ratio exhausted the expansion\n";
        return static_cast<int>(errc::connection);
      }
    } else if (verify->parsed()) {
      return verify_suites(T, suite_name, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.cls());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace iex
