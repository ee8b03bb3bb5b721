#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"
#include "pqs/parse.hpp"
#include "pqs/pieces.hpp"

namespace {

using namespace pqs;
using nlohmann::json;

constexpr int kOk = 0, kUsage = 1, kInput = 2, kEmpty = 3, kResource = 4, kInternal = 5;

struct Flags {
  std::string mode;
  unsigned jobs = 0, seed = 0;
  bool assume_bounded = false, assume_nonneg = false;
  std::string eps1, eps2;
  std::size_t n_cap = 0;
};

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mode", f.mode, "symbolic or hybrid")->check(CLI::IsMember({"symbolic", "hybrid"}));
  cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_flag("--assume-bounded", f.assume_bounded, "skip the bounding stage");
  cmd->add_flag("--assume-nonneg", f.assume_nonneg, "p is nonnegative; do not square it");
  cmd->add_option("--rational-eps1", f.eps1, "rational value a/b for eps1");
  cmd->add_option("--rational-eps2", f.eps2, "rational value a/b for eps2");
  cmd->add_option("--n-cap", f.n_cap, "largest quotient dimension attempted")->check(CLI::PositiveNumber);
}

PipelineConfig merged(PipelineConfig c, const Flags& f, const CLI::App* cmd) {
  if (cmd->count("--mode")) c.mode = f.mode == "symbolic" ? Mode::Symbolic : Mode::Hybrid;
  if (cmd->count("--jobs")) c.jobs = f.jobs;
  if (cmd->count("--seed")) c.seed = f.seed;
  if (f.assume_bounded) c.assume_bounded = true;
  if (f.assume_nonneg) c.assume_nonneg = true;
  auto rat = [](const std::string& flag, const std::string& text) {
    try {
      return parse_rat(text);
    } catch (const Error& e) {
      fail(ErrorKind::Input, flag + ": " + e.what());
    }
  };
  if (!f.eps1.empty()) c.rational_eps1 = rat("--rational-eps1", f.eps1);
  if (!f.eps2.empty()) c.rational_eps2 = rat("--rational-eps2", f.eps2);
  if (cmd->count("--n-cap")) c.n_cap = f.n_cap;
  try {
    c.validate();
  } catch (const Error& e) {
    fail(ErrorKind::Input, e.what());
  }
  return c;
}

void emit(const std::string& out, const json& j) {
  if (out.empty()) std::cout << j.dump(2) << '\n';
  else io::write_json(out, j);
}

json pieces_dump(const io::ProblemFile& pf, std::optional<std::size_t> r) {
  Prepared P = prepare(pf.problem, pf.config);
  std::size_t rank = r.value_or(P.r);
  std::vector<std::string> names = var_names("Y", P.prob.k());
  json j;
  j["n"] = P.prob.n();
  j["k"] = P.prob.k();
  j["r"] = rank;
  j["tower"] = P.tower ? P.tower->names() : std::vector<std::string>{};
  j["count"] = piece_count(P.prob.n(), rank);
  json list = json::array();
  for (const auto& pc : enum_pieces(P.prob, rank)) {
    auto vars = names;
    for (std::size_t i = 0; i < pc.free.size(); ++i) vars.push_back("T" + std::to_string(i + 1));
    json e;
    e["U"] = pc.pair.U;
    e["W"] = pc.pair.W;
    e["free"] = pc.free;
    e["degenerate"] = pc.degenerate();
    e["omega"] = pc.omega.to_string(vars);
    json th = json::array(), eq = json::array();
    for (const auto& t : pc.theta) th.push_back(t.to_string(vars));
    for (const auto& q : pc.equations) eq.push_back(q.to_string(vars));
    e["theta"] = th;
    e["equations"] = eq;
    e["inequation"] = pc.inequation.to_string(vars);
    list.push_back(e);
  }
  j["pieces"] = list;
  return j;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Input: return kInput;
    case ErrorKind::Resource: return kResource;
    default: return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample points on every connected component of p(Q(X)) = 0"};
  app.require_subcommand(1);

  Flags sf, df, pf;
  std::string problem_path, result_path, out;
  int bits = 0;
  bool approx = false;
  std::size_t rank = 0;

  auto* s = app.add_subcommand("sample", "write a result file with one point per component at least");
  s->add_option("problem", problem_path, "problem file")->required();
  add_run_flags(s, sf);
  s->add_flag("--approx", approx, "include rational approximations");
  s->add_option("--bits", bits, "approximation precision in bits")->check(CLI::PositiveNumber);
  s->add_option("--out", out, "output file (default stdout)");

  auto* d = app.add_subcommand("decide", "exit 0 when nonempty, 3 when empty");
  d->add_option("problem", problem_path, "problem file")->required();
  add_run_flags(d, df);

  auto* a = app.add_subcommand("approx", "add rational approximations to a result file");
  a->add_option("result", result_path, "result file")->required();
  a->add_option("--bits", bits, "precision in bits")->required()->check(CLI::PositiveNumber);
  a->add_option("--out", out, "output file (default stdout)");

  auto* v = app.add_subcommand("verify", "re-check a result file against a problem file");
  v->add_option("problem", problem_path, "problem file")->required();
  v->add_option("result", result_path, "result file")->required();

  auto* p = app.add_subcommand("pieces", "dump the piece decomposition of the deformed system");
  p->add_option("problem", problem_path, "problem file")->required();
  add_run_flags(p, pf);
  p->add_option("--r", rank, "rank offset (default n~ - k~)");
  p->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) {
      auto file = io::read_problem(problem_path);
      PipelineConfig cfg = merged(file.config, sf, s);
      auto rep = sample(file.problem, cfg);
      auto res = io::make_result(rep, cfg.mode);
      if (approx || bits > 0) io::add_approximations(res, bits > 0 ? bits : 30);
      emit(out, io::result_to_json(res));
      return kOk;
    }
    if (d->parsed()) {
      auto file = io::read_problem(problem_path);
      auto dec = decide(file.problem, merged(file.config, df, d));
      if (dec.status == Status::Empty) {
        std::cout << "EMPTY\n";
        return kEmpty;
      }
      std::cout << "NONEMPTY\n";
      io::ResultFile w;
      w.status = Status::Nonempty;
      w.points = {*dec.witness};
      io::add_approximations(w, 30);
      std::cout << io::result_to_json(w)["approximations"][0]["decimal"].dump() << '\n';
      return kOk;
    }
    if (a->parsed()) {
      auto res = io::read_result(result_path);
      io::add_approximations(res, bits);
      emit(out, io::result_to_json(res));
      return kOk;
    }
    if (v->parsed()) {
      auto file = io::read_problem(problem_path);
      auto res = io::read_result(result_path);
      bool ok = true;
      for (std::size_t i = 0; i < res.points.size(); ++i) {
        if (res.points[i].g.size() != file.problem.n())
          fail(ErrorKind::Input, "result.points[" + std::to_string(i) + "]: arity does not match the problem");
        auto check = verify_membership(res.points[i], file.problem);
        std::cout << "point " << i << ": " << (check.pass ? "ok" : "FAIL " + check.diagnostic) << '\n';
        ok = ok && check.pass;
      }
      std::cout << (ok ? "verified " : "rejected ") << res.points.size() << " points\n";
      return ok ? kOk : kInternal;
    }
    if (p->parsed()) {
      auto file = io::read_problem(problem_path);
      file.config = merged(file.config, pf, p);
      emit(out, pieces_dump(file, p->count("--r") ? std::optional<std::size_t>(rank) : std::nullopt));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
