#include "hermcert/commands.hpp"

#include "hermcert/linalg.hpp"

#include <filesystem>

namespace hermcert {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::string& require(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : piece.substr(first, last - first + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

PolySystem load_system(const RunConfig& c) { return system_from_json(read_json_file(require(c.system, "--system"))); }

ApproxRootSet load_roots(const std::string& path, const Ring& ring) {
  ApproxRootSet roots = roots_from_json(read_json_file(path));
  if (roots.size() > 0 && roots.arity() != ring.size())
    throw FormatError("roots have " + std::to_string(roots.arity()) + " coordinates but the system has " +
                      std::to_string(ring.size()) + " variables");
  return roots;
}

MultiPoly load_g(const RunConfig& c, const Ring& ring) { return parse_poly(c.g.value_or("1"), ring); }

CertifyOptions options(const RunConfig& c) { return CertifyOptions{c.seed, c.retries}; }

Json points_json(const std::vector<ComplexPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    Json coords = Json::array();
    for (const auto& z : p) coords.push_back(Json::array({format_double(z.real()), format_double(z.imag())}));
    out.push_back(std::move(coords));
  }
  return out;
}

int certificate_exit(const CertificationOutcome& o) { return o.certified() ? kExitOk : kExitCertFail; }

int verdict_exit(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::True: return kExitOk;
    case VerdictKind::False: return kExitVerdictFalse;
    case VerdictKind::Fail: return kExitCertFail;
  }
  return kExitCertFail;
}

CertificationOutcome certify_any(const PolySystem& f, const MultiPoly& g, const HermitePlus& h,
                                 const CertifyOptions& opts) {
  return h.total_points ? certify_nonradical(f, g, h, opts) : certify_pipeline(f, g, h, opts);
}

struct BuildOutput {
  HermitePlus hermite;
  Json json;
};

BuildOutput build_stage(const RunConfig& c, const PolySystem& sys) {
  const ApproxRootSet roots = load_roots(require(c.roots, "--roots"), sys.ring);
  const std::size_t n = sys.ring.size();
  if (roots.size() == 0) throw UsageError("roots file holds no points");

  MonomialBasis basis;
  std::string basis_source = "given";
  if (c.basis) {
    basis = basis_from_strings(split_commas(*c.basis), sys.ring);
    if (basis.size() != roots.size())
      throw UsageError("basis has " + std::to_string(basis.size()) + " monomials for " +
                       std::to_string(roots.size()) + " points");
  } else {
    try {
      basis = select_basis(roots, sys.ring);
      basis_source = "selected";
    } catch (const NoWellConditionedBasisError&) {
      basis = MonomialBasis::leading(n, roots.size());
      basis_source = "leading";
    }
  }

  HermitePlus full = build_hermite(roots, basis);
  const std::size_t k = basis.size();
  std::vector<std::size_t> prefix(k);
  for (std::size_t i = 0; i < k; ++i) prefix[i] = i;
  if (rank(full.matrix.principal_submatrix(prefix)) == k) {
    Json j = hermite_to_json(full, sys.ring);
    j["basis_source"] = basis_source;
    return {std::move(full), std::move(j)};
  }

  NonRadicalHermite nr = build_nonradical(roots, basis);
  Json j = hermite_to_json(nr.reduced, sys.ring);
  j["basis_source"] = basis_source;
  j["distinct_roots"] = nr.reduced_size;
  j["full_basis"] = monomial_strings(nr.full.basis.monomials(), sys.ring);
  return {std::move(nr.reduced), std::move(j)};
}

CommandResult cmd_build(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  return {build_stage(c, sys).json, kExitOk};
}

CommandResult cmd_certify(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  const HermitePlus h = hermite_from_json(read_json_file(require(c.hermite, "--hermite")), sys.ring);
  const CertificationOutcome o = certify_any(sys, load_g(c, sys.ring), h, options(c));
  return {certificate_to_json(o, sys.ring), certificate_exit(o)};
}

BallQuery parse_ball(const RunConfig& c) {
  BallQuery q;
  for (const auto& t : split_commas(require(c.center, "--center"))) q.center.push_back(parse_rational(t));
  q.radius_squared = parse_rational(require(c.eps2, "--eps2"));
  return q;
}

CommandResult cmd_ball(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  const HermitePlus h = hermite_from_json(read_json_file(require(c.hermite, "--hermite")), sys.ring);
  const Verdict v = certify_ball(sys, parse_ball(c), h, options(c));
  return {verdict_to_json(v, sys.ring), verdict_exit(v)};
}

CommandResult cmd_nonneg(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  const MultiPoly g = parse_poly(require(c.g, "--g"), sys.ring);
  const PolySystem lagrange = lagrange_system(sys, g);
  const ApproxRootSet roots = load_roots(require(c.roots, "--roots"), lagrange.ring);
  const Verdict v = certify_nonneg(sys, g, roots, options(c));
  Json j = verdict_to_json(v, lagrange.ring);
  j["assume_smooth_bounded"] = c.assume_smooth_bounded;
  j["lagrange_system"] = system_to_json(lagrange);
  j["bezout_bound"] = to_string(bezout_bound(sys, g));
  return {std::move(j), verdict_exit(v)};
}

CommandResult cmd_count_real(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  const HermitePlus h = hermite_from_json(read_json_file(require(c.hermite, "--hermite")), sys.ring);
  const CertificationOutcome o = certify_any(sys, MultiPoly::constant(sys.ring, 1), h, options(c));
  Json j = Json::object();
  if (o.certified()) j["real_roots"] = real_root_count(*o.h1);
  j["certificate"] = certificate_to_json(o, sys.ring);
  return {std::move(j), certificate_exit(o)};
}

CommandResult cmd_refine(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  const ApproxRootSet roots = load_roots(require(c.roots, "--roots"), sys.ring);
  std::vector<ComplexPoint> refined;
  Json residuals = Json::array();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    try {
      NewtonResult r = newton_refine(sys, roots.points()[i], c.iterations);
      residuals.push_back(format_double(r.residual));
      refined.push_back(std::move(r.point));
    } catch (const NewtonError& e) {
      Json err = {{"error", "newton"},
                  {"point", i},
                  {"kind", e.kind() == NewtonError::Kind::SingularJacobian ? "SingularJacobian" : "Diverged"},
                  {"message", e.what()}};
      return {std::move(err), kExitConstruction};
    }
  }
  Json j = Json::object();
  j["accuracy_E"] = to_string(roots.accuracy());
  j["bound_M"] = to_string(roots.bound());
  j["points"] = points_json(refined);
  j["residuals"] = std::move(residuals);
  return {std::move(j), kExitOk};
}

std::vector<RadiusPoint> with_radii(const ApproxRootSet& roots) {
  std::vector<RadiusPoint> out;
  const double e = to_double(roots.accuracy());
  for (std::size_t i = 0; i < roots.size(); ++i)
    out.push_back({roots.points()[i], roots.radii().empty() ? e : roots.radii()[i]});
  return out;
}

CommandResult cmd_filter(const RunConfig& c) {
  const PolySystem sys_a = load_system(c);
  const PolySystem sys_b = system_from_json(read_json_file(require(c.system_b, "--system-b")));
  if (sys_a.ring != sys_b.ring) throw UsageError("both square systems must use the same variables");
  const ApproxRootSet a = load_roots(require(c.roots, "--roots"), sys_a.ring);
  const ApproxRootSet b = load_roots(require(c.roots_b, "--roots-b"), sys_b.ring);
  const FilterResult r = match_and_filter(with_radii(a), with_radii(b), sys_a, sys_b, c.iterations);

  std::vector<ComplexPoint> kept_points;
  Json radii = Json::array();
  for (const auto& p : r.kept_points) {
    kept_points.push_back(p.point);
    radii.push_back(format_double(p.radius));
  }
  Json roots = Json::object();
  roots["accuracy_E"] = to_string(a.accuracy());
  roots["bound_M"] = to_string(a.bound());
  roots["points"] = points_json(kept_points);
  roots["radii"] = std::move(radii);

  Json j = Json::object();
  j["kept"] = r.kept;
  j["discarded"] = r.discarded;
  j["inconclusive"] = r.inconclusive;
  j["roots"] = std::move(roots);
  return {std::move(j), kExitOk};
}

CommandResult cmd_reconstruct(const RunConfig& c) {
  const Rational value = parse_rational(require(c.value, "--value"));
  Integer bound;
  if (bound.set_str(require(c.bound, "--bound"), 10) != 0 || bound < 1)
    throw UsageError("--bound must be a positive integer");
  Json j = Json::object();
  j["input"] = to_string(value);
  j["bound"] = to_string(bound);
  const auto r = rational_reconstruct(value, bound);
  if (!r) {
    j["error"] = "reconstruction";
    j["reason"] = "NotFound";
    return {std::move(j), kExitConstruction};
  }
  j["value"] = to_string(*r);
  return {std::move(j), kExitOk};
}

CommandResult cmd_pipeline(const RunConfig& c) {
  const PolySystem sys = load_system(c);
  BuildOutput built = build_stage(c, sys);
  Json j = Json::object();
  j["hermite"] = std::move(built.json);
  if (c.center || c.eps2) {
    const Verdict v = certify_ball(sys, parse_ball(c), built.hermite, options(c));
    j["verdict"] = verdict_to_json(v, sys.ring);
    return {std::move(j), verdict_exit(v)};
  }
  const CertificationOutcome o = certify_any(sys, load_g(c, sys.ring), built.hermite, options(c));
  j["certificate"] = certificate_to_json(o, sys.ring);
  return {std::move(j), certificate_exit(o)};
}

void check_paths(const RunConfig& c) {
  for (const auto* p : {&c.system, &c.system_b, &c.roots, &c.roots_b, &c.hermite})
    if (*p && !std::filesystem::is_regular_file(**p)) throw UsageError("input file not found: " + **p);
}

Json error_json(const char* kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

CommandResult run_command(const RunConfig& config) {
  try {
    check_paths(config);
    const std::string& cmd = config.command;
    if (cmd == "build") return cmd_build(config);
    if (cmd == "certify") return cmd_certify(config);
    if (cmd == "ball") return cmd_ball(config);
    if (cmd == "nonneg") return cmd_nonneg(config);
    if (cmd == "count-real") return cmd_count_real(config);
    if (cmd == "refine") return cmd_refine(config);
    if (cmd == "filter-roots") return cmd_filter(config);
    if (cmd == "reconstruct-rational") return cmd_reconstruct(config);
    if (cmd == "pipeline") return cmd_pipeline(config);
    throw UsageError("unknown command \"" + cmd + "\"");
  } catch (const ReconstructionError& e) {
    Json j = error_json("reconstruction", e.what());
    j["entry"] = {e.row(), e.col()};
    j["reason"] = to_string(e.reason());
    return {std::move(j), kExitConstruction};
  } catch (const NonRadicalRankError& e) {
    return {error_json("nonradical", e.what()), kExitConstruction};
  } catch (const NoConnectedSelectionError& e) {
    return {error_json("nonradical", e.what()), kExitConstruction};
  } catch (const UsageError& e) {
    return {error_json("usage", e.what()), kExitUsage};
  } catch (const PolyParseError& e) {
    Json j = error_json("parse", e.what());
    j["position"] = e.position();
    return {std::move(j), kExitUsage};
  } catch (const FormatError& e) {
    return {error_json("parse", e.what()), kExitUsage};
  } catch (const std::invalid_argument& e) {
    return {error_json("invalid-input", e.what()), kExitUsage};
  } catch (const std::domain_error& e) {
    return {error_json("invalid-input", e.what()), kExitUsage};
  }
}

}  // namespace hermcert
