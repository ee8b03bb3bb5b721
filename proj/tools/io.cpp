#include "io.hpp"

#include <fstream>
#include <sstream>

namespace pqs::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { fail(ErrorKind::Input, path + ": " + what); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing");
  return *it;
}

Rat rat_of(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a rational as a decimal string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

long long int_of(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

const json& array_of(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

json rats(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json poly_json(const QPoly& f) { return rats(f.coefs()); }

QPoly poly_of(const json& j, const std::string& path) {
  std::vector<Rat> c;
  const auto& a = array_of(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(rat_of(a[i], idx(path, i)));
  QPoly f(c);
  if (f.coefs().size() != c.size()) bad(path, "trailing zero coefficients");
  return f;
}

std::string mode_name(Mode m) { return m == Mode::Symbolic ? "symbolic" : "hybrid"; }

Mode mode_of(const json& j, const std::string& path) {
  if (j == "symbolic") return Mode::Symbolic;
  if (j == "hybrid") return Mode::Hybrid;
  bad(path, "expected \"symbolic\" or \"hybrid\"");
}

bool flag_of(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected a boolean");
  return j.get<bool>();
}

PipelineConfig config_of(const json& j, const std::string& path) {
  PipelineConfig c;
  if (!j.is_object()) bad(path, "expected an object");
  for (const auto& [key, v] : j.items()) {
    std::string p = path + "." + key;
    if (key == "mode") c.mode = mode_of(v, p);
    else if (key == "assume_bounded") c.assume_bounded = flag_of(v, p);
    else if (key == "assume_nonneg") c.assume_nonneg = flag_of(v, p);
    else if (key == "rational_eps1") c.rational_eps1 = v.is_null() ? std::nullopt : std::optional<Rat>(rat_of(v, p));
    else if (key == "rational_eps2") c.rational_eps2 = v.is_null() ? std::nullopt : std::optional<Rat>(rat_of(v, p));
    else if (key == "jobs") c.jobs = static_cast<unsigned>(int_of(v, p));
    else if (key == "seed") c.seed = static_cast<unsigned>(int_of(v, p));
    else if (key == "n_cap") c.n_cap = static_cast<std::size_t>(int_of(v, p));
    else bad(p, "unknown flag");
  }
  try {
    c.validate();
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return c;
}

json config_json(const PipelineConfig& c) {
  json j;
  j["mode"] = mode_name(c.mode);
  j["assume_bounded"] = c.assume_bounded;
  j["assume_nonneg"] = c.assume_nonneg;
  j["rational_eps1"] = c.rational_eps1 ? json(to_string(*c.rational_eps1)) : json(nullptr);
  j["rational_eps2"] = c.rational_eps2 ? json(to_string(*c.rational_eps2)) : json(nullptr);
  j["jobs"] = c.jobs;
  j["seed"] = c.seed;
  j["n_cap"] = c.n_cap;
  return j;
}

bool same_cert(const Eps0Certificate& a, const Eps0Certificate& b) {
  return a.applicable == b.applicable && a.test_polys == b.test_polys && a.bounds == b.bounds && a.value == b.value &&
         a.halvings == b.halvings;
}

}  // namespace

bool ResultFile::operator==(const ResultFile& o) const {
  return status == o.status && mode == o.mode && points == o.points && approximations == o.approximations &&
         pieces_processed == o.pieces_processed && candidates_pruned == o.candidates_pruned &&
         same_cert(certificate, o.certificate);
}

ProblemFile problem_from_json(const json& j) {
  ProblemFile pf;
  long long n = int_of(field(j, "n", "problem"), "problem.n");
  long long k = int_of(field(j, "k", "problem"), "problem.k");
  if (n < 1) bad("problem.n", "must be at least 1");
  if (k < 1) bad("problem.k", "must be at least 1");
  auto N = static_cast<std::size_t>(n), K = static_cast<std::size_t>(k);
  Problem& pr = pf.problem;
  pr.p = EMPoly(K);
  const auto& terms = array_of(field(j, "p", "problem"), "problem.p");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string path = idx("problem.p", t);
    const auto& term = terms[t];
    if (!term.is_array() || term.size() != 2) bad(path, "expected [coefficient, exponents]");
    Rat c = rat_of(term[0], path + "[0]");
    const auto& ex = array_of(term[1], path + "[1]");
    if (ex.size() != K) bad(path + "[1]", "exponent tuple has length " + std::to_string(ex.size()) + ", expected k = " + std::to_string(K));
    Mono m;
    for (std::size_t i = 0; i < K; ++i) {
      long long e = int_of(ex[i], idx(path + "[1]", i));
      if (e < 0) bad(idx(path + "[1]", i), "negative exponent");
      m.push_back(static_cast<int>(e));
    }
    pr.p.add_term(m, EpsScalar(c));
  }
  const auto& qs = array_of(field(j, "Q", "problem"), "problem.Q");
  if (qs.size() != K) bad("problem.Q", "has " + std::to_string(qs.size()) + " components, expected k = " + std::to_string(K));
  pr.Q.n = N;
  for (std::size_t q = 0; q < K; ++q) {
    std::string path = idx("problem.Q", q);
    QuadComponent comp;
    const auto& H = array_of(field(qs[q], "H", path), path + ".H");
    if (H.size() != N) bad(path + ".H", "expected " + std::to_string(N) + " rows");
    for (std::size_t r = 0; r < N; ++r) {
      const auto& row = array_of(H[r], idx(path + ".H", r));
      if (row.size() != N) bad(idx(path + ".H", r), "expected " + std::to_string(N) + " entries");
      std::vector<EpsScalar> v;
      for (std::size_t c = 0; c < N; ++c) v.emplace_back(rat_of(row[c], idx(idx(path + ".H", r), c)));
      comp.H.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r + 1; c < N; ++c)
        if (comp.H[r][c] != comp.H[c][r])
          bad(idx(idx(path + ".H", r), c), "H is not symmetric (differs from entry [" + std::to_string(c) + "][" + std::to_string(r) + "])");
    const auto& b = array_of(field(qs[q], "b", path), path + ".b");
    if (b.size() != N) bad(path + ".b", "expected " + std::to_string(N) + " entries");
    for (std::size_t i = 0; i < N; ++i) comp.b.emplace_back(rat_of(b[i], idx(path + ".b", i)));
    comp.c = rat_of(field(qs[q], "c", path), path + ".c");
    pr.Q.comps.push_back(std::move(comp));
  }
  pr.validate();
  if (j.contains("config")) pf.config = config_of(j["config"], "problem.config");
  return pf;
}

json problem_to_json(const ProblemFile& pf) {
  const Problem& pr = pf.problem;
  json j;
  j["n"] = pr.n();
  j["k"] = pr.k();
  json terms = json::array();
  for (const auto& [m, c] : pr.p.terms()) terms.push_back(json::array({to_string(c.rational()), m}));
  j["p"] = terms;
  json qs = json::array();
  for (const auto& comp : pr.Q.comps) {
    json H = json::array();
    for (const auto& row : comp.H) {
      json r = json::array();
      for (const auto& x : row) r.push_back(to_string(x.rational()));
      H.push_back(r);
    }
    json b = json::array();
    for (const auto& x : comp.b) b.push_back(to_string(x.rational()));
    qs.push_back({{"H", H}, {"b", b}, {"c", to_string(comp.c.rational())}});
  }
  j["Q"] = qs;
  j["config"] = config_json(pf.config);
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Input, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Input, path + ": cannot write");
  out << j.dump(2) << '\n';
}

ProblemFile read_problem(const std::string& path) { return problem_from_json(read_json(path)); }

json result_to_json(const ResultFile& r) {
  json j;
  j["status"] = r.status == Status::Empty ? "EMPTY" : "NONEMPTY";
  j["mode"] = r.mode;
  json pts = json::array();
  for (const auto& p : r.points) {
    json g = json::array();
    for (const auto& x : p.g) g.push_back(poly_json(x));
    pts.push_back({{"f", poly_json(p.f)}, {"g0", poly_json(p.g0)}, {"g", g}, {"thom", p.sigma}});
  }
  j["points"] = pts;
  if (!r.approximations.empty()) {
    json ap = json::array();
    for (const auto& a : r.approximations) {
      json dec = json::array();
      int digits = a.bits * 3 / 10 + 2;
      for (const auto& x : a.coords) dec.push_back(decimal(x, digits));
      ap.push_back({{"bits", a.bits}, {"coords", rats(a.coords)}, {"decimal", dec}});
    }
    j["approximations"] = ap;
  }
  json tests = json::array();
  for (const auto& t : r.certificate.test_polys) tests.push_back(poly_json(t));
  j["certificate"] = {{"pieces_processed", r.pieces_processed},
                      {"candidates_pruned", r.candidates_pruned},
                      {"eps0",
                       {{"applicable", r.certificate.applicable},
                        {"value", to_string(r.certificate.value)},
                        {"halvings", r.certificate.halvings},
                        {"bounds", rats(r.certificate.bounds)},
                        {"test_polys", tests}}}};
  return j;
}

ResultFile result_from_json(const json& j) {
  ResultFile r;
  const auto& st = field(j, "status", "result");
  if (st == "EMPTY") r.status = Status::Empty;
  else if (st == "NONEMPTY") r.status = Status::Nonempty;
  else bad("result.status", "expected \"EMPTY\" or \"NONEMPTY\"");
  if (j.contains("mode")) {
    mode_of(j["mode"], "result.mode");
    r.mode = j["mode"].get<std::string>();
  }
  const auto& pts = array_of(field(j, "points", "result"), "result.points");
  std::size_t arity = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string path = idx("result.points", i);
    RealURep p;
    p.f = poly_of(field(pts[i], "f", path), path + ".f");
    p.g0 = poly_of(field(pts[i], "g0", path), path + ".g0");
    const auto& g = array_of(field(pts[i], "g", path), path + ".g");
    for (std::size_t c = 0; c < g.size(); ++c) p.g.push_back(poly_of(g[c], idx(path + ".g", c)));
    const auto& th = array_of(field(pts[i], "thom", path), path + ".thom");
    for (std::size_t c = 0; c < th.size(); ++c) {
      long long s = int_of(th[c], idx(path + ".thom", c));
      if (s < -1 || s > 1) bad(idx(path + ".thom", c), "Thom entries lie in {-1, 0, 1}");
      p.sigma.push_back(static_cast<int>(s));
    }
    if (p.f.degree() < 1) bad(path + ".f", "must have positive degree");
    if (p.sigma.size() != static_cast<std::size_t>(p.f.degree() - 1)) bad(path + ".thom", "length must be deg f - 1");
    if (i == 0) arity = p.g.size();
    else if (p.g.size() != arity) bad(path + ".g", "points have different arities");
    r.points.push_back(std::move(p));
  }
  if ((r.status == Status::Empty) != r.points.empty()) bad("result.status", "inconsistent with the number of points");
  if (j.contains("approximations")) {
    const auto& ap = array_of(j["approximations"], "result.approximations");
    if (ap.size() != r.points.size()) bad("result.approximations", "expected one entry per point");
    for (std::size_t i = 0; i < ap.size(); ++i) {
      std::string path = idx("result.approximations", i);
      Approximation a;
      a.bits = static_cast<int>(int_of(field(ap[i], "bits", path), path + ".bits"));
      const auto& cs = array_of(field(ap[i], "coords", path), path + ".coords");
      if (cs.size() != arity) bad(path + ".coords", "arity mismatch");
      for (std::size_t c = 0; c < cs.size(); ++c) a.coords.push_back(rat_of(cs[c], idx(path + ".coords", c)));
      r.approximations.push_back(std::move(a));
    }
  }
  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    r.pieces_processed = static_cast<std::size_t>(int_of(field(c, "pieces_processed", "result.certificate"), "result.certificate.pieces_processed"));
    r.candidates_pruned = static_cast<std::size_t>(int_of(field(c, "candidates_pruned", "result.certificate"), "result.certificate.candidates_pruned"));
    const auto& e = field(c, "eps0", "result.certificate");
    std::string path = "result.certificate.eps0";
    r.certificate.applicable = flag_of(field(e, "applicable", path), path + ".applicable");
    r.certificate.value = rat_of(field(e, "value", path), path + ".value");
    r.certificate.halvings = static_cast<int>(int_of(field(e, "halvings", path), path + ".halvings"));
    const auto& bs = array_of(field(e, "bounds", path), path + ".bounds");
    for (std::size_t i = 0; i < bs.size(); ++i) r.certificate.bounds.push_back(rat_of(bs[i], idx(path + ".bounds", i)));
    const auto& ts = array_of(field(e, "test_polys", path), path + ".test_polys");
    for (std::size_t i = 0; i < ts.size(); ++i) r.certificate.test_polys.push_back(poly_of(ts[i], idx(path + ".test_polys", i)));
  }
  return r;
}

ResultFile read_result(const std::string& path) { return result_from_json(read_json(path)); }

ResultFile make_result(const SampleReport& rep, Mode mode) {
  ResultFile r;
  r.status = rep.status;
  r.mode = mode_name(mode);
  r.points = rep.points;
  r.pieces_processed = rep.pieces_processed;
  r.candidates_pruned = rep.candidates_pruned;
  r.certificate = rep.certificate;
  return r;
}

void add_approximations(ResultFile& r, int bits) {
  require(bits >= 1, ErrorKind::Input, "bits must be positive");
  r.approximations.clear();
  for (const auto& p : r.points) r.approximations.push_back({bits, refine(p, bits)});
}

std::string decimal(const Rat& x, int digits) {
  Rat a = abs(x);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int q = Int(a.get_num() * scale) / a.get_den();
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string out = (x < 0 && q != 0 ? "-" : "") + s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return out;
}

}  // namespace pqs::io
