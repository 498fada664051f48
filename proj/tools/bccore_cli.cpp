// bccore: compute, verify, decompose and cross-check generalized inverses.
//
// Exit codes: 0 found / true / clean, 2 negative but valid, 1 input error.

#include "bccore/bccore.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace bccore;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct Options {
  std::string kind;
  std::string a, b, c, v, x;
  unsigned kmax = 0;
  std::string out;

  std::string theorem = "all";
  std::string ring;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<std::uint64_t> samples;
  std::string dims = "1..4";
  long bound = 3;
  std::uint64_t count = 500;
  std::string family = "general";
};

void emit(const json& j, const std::string& out) {
  const auto text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

/// Reads the input files, checks that every descriptor matches a's.
struct Loaded {
  RingDescriptor ring;
  json a, b, c, v, x;
};

Loaded load(const Options& o, InverseKind kind, bool with_candidate) {
  Loaded l;
  const auto fa = read_element_file(o.a);
  l.ring = fa.ring;
  l.a = fa.payload;
  auto take = [&](const std::string& path, json& slot) {
    if (path.empty()) {
      slot = fa.payload;
      return;
    }
    const auto f = read_element_file(path);
    if (!(f.ring == fa.ring))
      throw InputError("descriptor mismatch: " + o.a + " is " + fa.ring.to_string() + ", " + path + " is " + f.ring.to_string());
    slot = f.payload;
  };
  if (arity(kind) == Arity::element_bc) {
    take(o.b, l.b);
    take(o.c, l.c);
  }
  if (arity(kind) == Arity::element_v) take(o.v, l.v);
  if (with_candidate) {
    if (o.x.empty()) throw InputError("verify needs --x");
    take(o.x, l.x);
  }
  return l;
}

InverseKind kind_flag(const std::string& s) {
  const auto k = parse_inverse_kind(s);
  if (!k) throw InputError("unknown kind '" + s + "'");
  return *k;
}

template <StarRing R>
InverseInputs<Elem<R>> inputs_for(const R& r, InverseKind kind, const Loaded& l, unsigned kmax) {
  InverseInputs<Elem<R>> in{payload_from_json(r, l.a), {}, {}, {}, kmax};
  if (arity(kind) == Arity::element_bc) {
    in.b = payload_from_json(r, l.b);
    in.c = payload_from_json(r, l.c);
  }
  if (arity(kind) == Arity::element_v) in.v = payload_from_json(r, l.v);
  return in;
}

int cmd_compute(const Options& o) {
  const auto kind = kind_flag(o.kind);
  if (!has_compute_path(kind)) throw InputError(o.kind + " can only be verified");
  const auto l = load(o, kind, false);
  return std::visit(
      [&](const auto& r) {
        const auto rep = compute(r, kind, inputs_for(r, kind, l, o.kmax));
        emit(result_file_json(r, rep), o.out);
        return rep.candidate ? kOk : kNegative;
      },
      make_ring(l.ring));
}

int cmd_verify(const Options& o) {
  const auto kind = kind_flag(o.kind);
  const auto l = load(o, kind, true);
  return std::visit(
      [&](const auto& r) {
        const auto rep = verify(r, kind, inputs_for(r, kind, l, o.kmax), payload_from_json(r, l.x));
        emit(to_json(r, rep), o.out);
        return rep.overall ? kOk : kNegative;
      },
      make_ring(l.ring));
}

int cmd_decompose(const Options& o) {
  const auto l = load(o, InverseKind::left_dual_v_core, false);
  return std::visit(
      [&](const auto& r) {
        const auto a = payload_from_json(r, l.a);
        const auto v = payload_from_json(r, l.v);
        const auto d = nilpotent_decomposition(r, a, v);
        if (!d) {
          emit({{"status", "not-invertible"},
                {"ring", to_json(r.descriptor())},
                {"inputs", {{"a", payload_to_json(r, a)}, {"v", payload_to_json(r, v)}}}},
               o.out);
          return kNegative;
        }
        emit(to_json(r, *d, decomposition_verdicts(r, *d)), o.out);
        return kOk;
      },
      make_ring(l.ring));
}

std::pair<unsigned, unsigned> parse_dims(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto d = static_cast<unsigned>(std::stoul(s));
      return {d, d};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::logic_error&) {
    throw InputError("bad --dims '" + s + "'");
  }
}

int cmd_battery(const Options& o) {
  std::vector<Theorem> theorems;
  if (o.theorem == "all") {
    theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else {
    const auto th = parse_theorem(o.theorem);
    if (!th) throw InputError("unknown theorem '" + o.theorem + "'");
    theorems.push_back(*th);
  }
  if (o.ring.empty()) throw InputError("battery needs --ring");
  BatteryOptions opt;
  opt.workers = std::max(1u, o.workers);

  std::vector<TheoremBatteryReport> reports;
  if (o.ring == "Mat:Q") {
    MatrixCorpusSpec spec;
    std::tie(spec.dim_min, spec.dim_max) = parse_dims(o.dims);
    if (spec.dim_min < 1 || spec.dim_min > spec.dim_max) throw InputError("bad --dims '" + o.dims + "'");
    spec.bound = o.bound;
    spec.count = o.count;
    spec.seed = o.seed;
    if (o.family == "nilpotent") spec.family = MatrixFamily::nilpotent;
    else if (o.family != "general") throw InputError("unknown family '" + o.family + "'");
    for (auto th : theorems) reports.push_back(run_battery(th, spec, opt));
  } else {
    const auto d = parse_descriptor(o.ring);
    if (d.kind == RingDescriptor::Kind::matrix) throw InputError("matrix batteries use --ring Mat:Q with --dims/--count");
    const FiniteRing ring(d);
    for (auto th : theorems) reports.push_back(run_battery(th, ring, o.samples, o.seed, opt));
  }

  bool clean = true;
  json out;
  if (reports.size() == 1) {
    out = to_json(reports.front());
  } else {
    out["reports"] = json::array();
    for (const auto& rep : reports) out["reports"].push_back(to_json(rep));
  }
  for (const auto& rep : reports) clean = clean && rep.clean();
  emit(out, o.out);
  return clean ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left dual (b,c)-core inverses over exact rings"};
  app.require_subcommand(1);
  Options o;

  auto element_flags = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "element file for a")->required();
    sub->add_option("--b", o.b, "element file for b (default: a)");
    sub->add_option("--c", o.c, "element file for c (default: a)");
    sub->add_option("--v", o.v, "element file for v (default: a)");
    sub->add_option("--kmax", o.kmax, "pseudo-core index bound (0: ring default)");
    sub->add_option("--out", o.out, "output path (default: stdout)");
  };

  auto* compute_cmd = app.add_subcommand("compute", "compute a canonical inverse");
  compute_cmd->add_option("--kind", o.kind, "inverse kind")->required();
  element_flags(compute_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a candidate against the defining equations");
  verify_cmd->add_option("--kind", o.kind, "inverse kind")->required();
  element_flags(verify_cmd);
  verify_cmd->add_option("--x,--candidate", o.x, "element file for the candidate")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "va = a1 + a2 from a left dual v-core inverse");
  decompose_cmd->add_option("--a", o.a, "element file for a")->required();
  decompose_cmd->add_option("--v", o.v, "element file for v (default: a)");
  decompose_cmd->add_option("--out", o.out, "output path (default: stdout)");

  auto* battery_cmd = app.add_subcommand("battery", "cross-check a theorem against brute force");
  battery_cmd->add_option("--theorem", o.theorem, "theorem tag or all");
  battery_cmd->add_option("--ring", o.ring, "Zn:N, MatZp:KxK:pP, or Mat:Q for the random rational corpus")->required();
  battery_cmd->add_option("--seed", o.seed, "corpus seed");
  battery_cmd->add_option("--workers", o.workers, "worker threads");
  battery_cmd->add_option("--samples", o.samples, "sample this many tuples instead of sweeping");
  battery_cmd->add_option("--dims", o.dims, "Mat:Q dimensions, e.g. 1..4");
  battery_cmd->add_option("--bound", o.bound, "Mat:Q entry bound");
  battery_cmd->add_option("--count", o.count, "Mat:Q applicable tuples");
  battery_cmd->add_option("--family", o.family, "Mat:Q family: general or nilpotent");
  battery_cmd->add_option("--out", o.out, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*compute_cmd) return cmd_compute(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*decompose_cmd) return cmd_decompose(o);
    if (*battery_cmd) return cmd_battery(o);
  } catch (const std::exception& e) {
    std::cerr << "bccore: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
