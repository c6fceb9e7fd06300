#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "braids/braids.hpp"
#include "braids/json_io.hpp"
#include "braids/verify.hpp"

namespace {

using namespace braids;

constexpr const char* kSchema = "1";

// The word argument carries its own minimal strand count; --strands widens
// it (extra trivial strands change the closure, so this matters).
BraidWord read_word(const std::string& text, std::optional<int> strands) {
  int max_letter = 0;
  BraidWord probe = parse_word(text, 1000001);
  for (int x : probe.letters) max_letter = std::max(max_letter, x);
  int n = strands.value_or(max_letter + 1);
  if (n < 1) throw ParseError("strand count must be positive", 0);
  return parse_word(text, n);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Flags {
  std::string word_text;
  std::optional<int> strands;
  bool json = false;
  std::size_t max_orbit = 0;  // 0 = env override or default

  [[nodiscard]] OrbitOptions orbit_options() const {
    OrbitOptions opts;
    opts.max_size = max_orbit ? max_orbit : orbit_bound_from_env(opts.max_size);
    return opts;
  }
};

int cmd_nf(const Flags& f) {
  NormalForm nf = normal_form(read_word(f.word_text, f.strands));
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j.update(json_of(nf));
    if (nf.is_square_free()) {
      Json blocks = Json::array();
      for (auto [k, jj] : divisor_form_of(nf.permutation()).blocks)
        blocks.push_back(Json::array({k, jj}));
      j["blocks"] = blocks;
    }
    emit(j);
    return 0;
  }
  std::cout << "strands=" << nf.strands() << "\n";
  std::cout << "degree=" << nf.degree() << "\n";
  std::cout << "square_free=" << bool_text(nf.is_square_free()) << "\n";
  std::cout << "canonical_word=" << to_text(nf.canonical_word()) << "\n";
  std::string factors;
  for (const auto& p : nf.factors()) {
    factors += '[';
    for (std::size_t i = 0; i < p.images().size(); ++i) {
      if (i) factors += ' ';
      factors += std::to_string(p.images()[i]);
    }
    factors += ']';
  }
  std::cout << "factors=" << factors << "\n";
  if (nf.is_square_free()) {
    std::string blocks;
    for (auto [k, j] : divisor_form_of(nf.permutation()).blocks)
      blocks += "(" + std::to_string(k) + "," + std::to_string(j) + ")";
    std::cout << "blocks=" << blocks << "\n";
  }
  return 0;
}

int cmd_simple(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  OrbitOptions opts = f.orbit_options();
  const bool literal = is_literally_simple(w);
  int exit_code = 0;

  // Each characterization degrades on its own: a truncated search flags the
  // run as incomplete, a strand ceiling just leaves that one test unknown.
  auto guarded = [&](auto&& test) -> std::optional<bool> {
    try {
      return test();
    } catch (const BoundExceeded& e) {
      std::cerr << "bound exceeded: " << e.what() << "\n";
      exit_code = 1;
    } catch (const std::invalid_argument& e) {
      std::cerr << "out of range: " << e.what() << "\n";
    }
    return std::nullopt;
  };
  std::optional<bool> conjugate = guarded([&] { return is_conjugate_simple(w, opts); });
  std::optional<bool> invariant = guarded([&] { return is_invariant_simple(w, opts); });
  std::optional<bool> markov = guarded([&] { return is_markov_simple_bounded(w, 2); });
  DInvariant calc(opts);
  std::optional<bool> geometric = guarded([&] { return is_geometrically_simple(w, &calc); });

  auto text = [&](const std::optional<bool>& v) {
    return v ? bool_text(*v) : std::string("unknown");
  };
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j["word"] = to_text(w);
    j["strands"] = w.strands;
    j["literally_simple"] = literal;
    j["conjugate_simple"] = conjugate ? Json(*conjugate) : Json(nullptr);
    j["invariant_simple"] = invariant ? Json(*invariant) : Json(nullptr);
    j["markov_simple_bounded"] = markov ? Json(*markov) : Json(nullptr);
    j["geometrically_simple"] = geometric ? Json(*geometric) : Json(nullptr);
    emit(j);
    return exit_code;
  }
  std::cout << "literally_simple=" << bool_text(literal) << "\n";
  std::cout << "conjugate_simple=" << text(conjugate) << "\n";
  std::cout << "invariant_simple=" << text(invariant) << "\n";
  std::cout << "markov_simple_bounded=" << text(markov) << "\n";
  std::cout << "geometrically_simple=" << text(geometric) << "\n";
  return exit_code;
}

int cmd_cycles(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  CycleDecomposition d = cycle_decomposition(w);
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j.update(json_of(d));
    emit(j);
    return 0;
  }
  std::cout << "strands=" << d.strands << "\n";
  std::cout << "decomposition=" << to_string(d) << "\n";
  return 0;
}

int cmd_conj_canon(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  ConjugacyType t = conjugacy_type(w);
  BraidWord beta = canonical_conjugacy_word(t);
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j.update(json_of(t));
    j["beta"] = to_text(beta);
    emit(j);
    return 0;
  }
  std::cout << to_string(t) << "\n";
  std::cout << "beta=" << to_text(beta) << "\n";
  return 0;
}

int cmd_d_poly(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  DInvariant calc(f.orbit_options());
  Laurent value = calc.value(w);
  if (f.json) {
    emit(json_of(value));
    return 0;
  }
  std::cout << to_string(value) << "\n";
  return 0;
}

int cmd_orbit(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  OrbitResult orbit = positive_conjugacy_orbit(w, f.orbit_options());
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j.update(json_of(orbit));
    emit(j);
    return orbit.complete ? 0 : 1;
  }
  std::cout << "size=" << orbit.members.size() << "\n";
  std::cout << "complete=" << bool_text(orbit.complete) << "\n";
  std::cout << "all_square_free=" << bool_text(orbit.all_square_free) << "\n";
  if (orbit.witness) {
    std::cout << "witness_conjugator=" << to_text(orbit.witness->conjugator) << "\n";
    std::cout << "witness_word=" << to_text(orbit.witness->word) << "\n";
  }
  if (!orbit.complete) std::cerr << "bound exceeded: orbit truncated\n";
  return orbit.complete ? 0 : 1;
}

int cmd_markov_reduce(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  auto moves = markov_reduce(w);
  BraidWord end = replay_moves(w, moves);
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j["moves"] = json_of(moves);
    j["final_strands"] = end.strands;
    emit(j);
    return 0;
  }
  for (const auto& m : moves) {
    std::cout << to_string(m.kind);
    if (m.conjugator) std::cout << " conjugator=" << to_text(*m.conjugator);
    std::cout << " " << m.strands_before << "->" << m.strands_after << "\n";
  }
  std::cout << "final_strands=" << end.strands << "\n";
  return 0;
}

int cmd_closure(const Flags& f) {
  BraidWord w = read_word(f.word_text, f.strands);
  if (f.json) {
    Json j;
    j["schema"] = kSchema;
    j.update(json_of_linking(w));
    emit(j);
    return 0;
  }
  auto comps = closure_components(w);
  std::cout << "components=" << comps.size() << "\n";
  for (const auto& c : comps) {
    std::cout << "component=";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
    std::cout << "\n";
  }
  for (const auto& row : linking_matrix(w)) {
    std::cout << "linking_row=";
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << to_string(row[i]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(int max_strands, bool json) {
  auto suites = verify::run_all({max_strands});
  bool all_passed = true;
  for (const auto& s : suites) all_passed = all_passed && s.passed;
  if (json) {
    Json rows = Json::array();
    for (const auto& s : suites) {
      Json r;
      r["name"] = s.name;
      r["passed"] = s.passed;
      r["skipped"] = s.skipped;
      r["checks"] = s.checks;
      r["detail"] = s.detail;
      rows.push_back(r);
    }
    Json j;
    j["schema"] = kSchema;
    j["max_strands"] = max_strands;
    j["suites"] = rows;
    j["all_passed"] = all_passed;
    emit(j);
  } else {
    for (const auto& s : suites) {
      const char* status = s.skipped ? "SKIP" : (s.passed ? "PASS" : "FAIL");
      std::printf("%-24s %-4s %7ld  %s\n", s.name.c_str(), status, s.checks, s.detail.c_str());
      std::fprintf(stderr, "%-24s %.2fs\n", s.name.c_str(), s.seconds);
    }
    std::printf("result=%s\n", all_passed ? "PASS" : "FAIL");
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive braid toolbox"};
  app.require_subcommand(1);

  Flags flags;
  int strands_flag = 0;
  int max_strands = 5;
  bool json = false;
  std::size_t max_orbit = 0;

  auto add_word_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", flags.word_text, "braid word, e.g. \"x3 x2\" or \"3.2\"")
        ->required();
    sub->add_option("--strands", strands_flag, "strand count (default: smallest that fits)");
    sub->add_flag("--json", json, "JSON output");
    sub->add_option("--max-orbit", max_orbit, "orbit search bound");
    return sub;
  };

  CLI::App* nf = add_word_command("nf", "normal form and block form");
  CLI::App* simple = add_word_command("simple", "simplicity under every characterization");
  CLI::App* cycles = add_word_command("cycles", "cycle decomposition");
  CLI::App* conj = add_word_command("conj-canon", "conjugacy type and canonical word");
  CLI::App* dpoly = add_word_command("d-poly", "link polynomial of the closure");
  CLI::App* orbit = add_word_command("orbit", "positive conjugacy orbit");
  CLI::App* markov = add_word_command("markov-reduce", "move trace down to a unit braid");
  CLI::App* closure = add_word_command("closure", "closure components and linking");

  CLI::App* verify = app.add_subcommand("verify", "run the bounded check suites");
  verify->add_option("--max-strands", max_strands, "strand bound, 2..6")
      ->check(CLI::Range(2, 6));
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (strands_flag > 0) flags.strands = strands_flag;
  flags.json = json;
  flags.max_orbit = max_orbit;

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (nf->parsed()) code = cmd_nf(flags);
    else if (simple->parsed()) code = cmd_simple(flags);
    else if (cycles->parsed()) code = cmd_cycles(flags);
    else if (conj->parsed()) code = cmd_conj_canon(flags);
    else if (dpoly->parsed()) code = cmd_d_poly(flags);
    else if (orbit->parsed()) code = cmd_orbit(flags);
    else if (markov->parsed()) code = cmd_markov_reduce(flags);
    else if (closure->parsed()) code = cmd_closure(flags);
    else if (verify->parsed()) code = cmd_verify(max_strands, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "elapsed %.3fs\n", seconds);
  return code;
}
