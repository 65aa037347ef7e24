#pragma once

// Command execution for the ncdet tool. run() never throws; it returns the
// output document and the process exit status:
//   0 success, 2 parse or usage error, 3 precondition violation (singular
//   matrix, non-Hermitian input, shape, enumeration bound, elimination stall),
//   4 undefined quasideterminant, 5 disagreement between evaluation paths or
//   a failed verification suite.

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include "ncdet/io.hpp"
#include "ncdet/verify.hpp"

namespace ncdet::cli {

using json = nlohmann::json;

enum class Command { rdet, cdet, mdet, ddet, inverse, solve, quasidet, qsolve, rank, verify };

inline Command parse_command(const std::string& s) {
  static const std::pair<const char*, Command> table[] = {
      {"rdet", Command::rdet},       {"cdet", Command::cdet},         {"mdet", Command::mdet},
      {"ddet", Command::ddet},       {"inverse", Command::inverse},   {"solve", Command::solve},
      {"quasidet", Command::quasidet}, {"qsolve", Command::qsolve},   {"rank", Command::rank},
      {"verify", Command::verify}};
  for (const auto& [name, cmd] : table)
    if (s == name)
      return cmd;
  throw parse_error("unknown command '" + s + "'");
}

enum class Method { cramer, inverse, quasi };

inline Method parse_method(const std::string& s) {
  if (s == "cramer")
    return Method::cramer;
  if (s == "inverse")
    return Method::inverse;
  if (s == "quasi")
    return Method::quasi;
  throw parse_error("method must be cramer, inverse or quasi, got '" + s + "'");
}

struct JobSpec {
  std::string command;
  std::optional<std::string> input;
  // 1-based, as typed on the command line
  std::optional<long> i, j, p, q;
  std::optional<std::string> side;
  std::string method = "cramer";
  unsigned parallel = 1;
  std::optional<std::string> output;
  std::string scale = "small";
  bool allow_large = false;
  /// Where verify writes reproducer files for failed suites.
  std::string repro_dir = ".";
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

enum Exit : int { ok = 0, usage = 2, precondition = 3, undefined = 4, disagreement = 5 };

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

namespace detail {

inline void require_indices(const JobSpec& s, bool i, bool j, bool p, bool q) {
  auto check = [](const std::optional<long>& v, bool needed, const char* flag) {
    if (needed && !v)
      throw parse_error(std::string("missing required index ") + flag);
    if (!needed && v)
      throw parse_error(std::string("index ") + flag + " is not used by this command");
  };
  check(s.i, i, "-i");
  check(s.j, j, "-j");
  check(s.p, p, "-p");
  check(s.q, q, "-q");
}

inline json index_list(const IndexSet& s) {
  json arr = json::array();
  for (Index k : s)
    arr.push_back(io::to_display(k));
  return arr;
}

inline json witness_json(const Witness& w) {
  return json{{"kind", to_string(w.kind)}, {"rows", index_list(w.rows)}, {"cols", index_list(w.cols)},
              {"detail", w.detail}};
}

template <class F>
json scalar_json(const F& v) {
  return scalar_traits<F>::format(v);
}

template <class F>
json quasi_json(const QuasiResult<F>& r) {
  if (r.defined())
    return json{{"defined", true}, {"value", r->to_string()}};
  return json{{"defined", false}, {"witness", witness_json(*r.failure)}};
}

template <class F>
Index checked_index(const std::optional<long>& v, const QMatrix<F>& a) {
  Index k = io::from_display(*v);
  if (k >= a.rows())
    throw shape_error("index " + std::to_string(*v) + " out of range for " + a.shape());
  return k;
}

template <class F>
json solve_system(const io::System<F>& sys, Method method, const DetOptions& opts) {
  QMatrix<F> x = [&] {
    bool right = sys.side == io::Side::right;
    switch (method) {
      case Method::cramer:
        return right ? solve_right(sys.a, sys.y, opts) : solve_left(sys.a, sys.y, opts);
      case Method::inverse: {
        QMatrix<F> inv = inverse(sys.a, opts);
        return right ? inv * sys.y : sys.y * inv;
      }
      case Method::quasi:
        return right ? quasi_solve(sys.a, sys.y) : quasi_solve_left(sys.a, sys.y);
    }
    throw parse_error("unknown method");
  }();
  return json{{"side", io::to_string(sys.side)}, {"solution", io::entries_to_json(x)}};
}

template <class F>
int run_typed(const JobSpec& s, Command cmd, const json& doc, json& out) {
  DetOptions opts;
  opts.workers = s.parallel == 0 ? 1 : s.parallel;
  opts.allow_large = s.allow_large;

  if (cmd == Command::solve || cmd == Command::qsolve) {
    io::System<F> sys = io::parse_system<F>(doc);
    if (s.side && io::parse_side(*s.side) != sys.side)
      throw parse_error("--side " + *s.side + " contradicts the system file side '" + io::to_string(sys.side) + "'");
    out["algebra"] = io::algebra_to_json(sys.a.algebra());
    out["scalar"] = std::string(scalar_traits<F>::name);
    Method m = cmd == Command::qsolve ? Method::quasi : parse_method(s.method);
    out["result"] = solve_system(sys, m, opts);
    return Exit::ok;
  }

  QMatrix<F> a = io::parse_matrix<F>(doc);
  out["algebra"] = io::algebra_to_json(a.algebra());
  out["scalar"] = std::string(scalar_traits<F>::name);

  switch (cmd) {
    case Command::rdet:
    case Command::cdet: {
      bool row = cmd == Command::rdet;
      Index k = checked_index(row ? s.i : s.j, a);
      DetReport<F> rep = row ? rdet_report(a, k, opts) : cdet_report(a, k, opts);
      out["result"] = json{{"kind", to_string(rep.kind)},
                           {"index", io::to_display(rep.index)},
                           {"value", rep.value.to_string()},
                           {"monomial_count", rep.monomial_count}};
      return Exit::ok;
    }
    case Command::mdet:
      out["result"] = json{{"kind", "mdet"}, {"value", mdet(a).to_string()}};
      return Exit::ok;
    case Command::ddet:
      out["result"] = json{{"kind", "ddet"}, {"value", scalar_json(ddet(a, opts))}};
      return Exit::ok;
    case Command::inverse:
      out["result"] = json{{"matrix", io::entries_to_json(inverse(a, opts))}};
      return Exit::ok;
    case Command::quasidet: {
      Index p = checked_index(s.p, a), q = checked_index(s.q, a);
      QuasiResult<F> direct = quasideterminant(a, p, q, QuasiOptions{opts, true});
      json res = quasi_json(direct);
      res["p"] = io::to_display(p);
      res["q"] = io::to_display(q);
      if (!scalar_traits<F>::is_zero(ddet(a, opts))) {
        auto forms = quasidet_via_rc(a, p, q, opts);
        if (direct.defined())
          for (const auto* f : {&forms.column_form, &forms.row_form})
            if (f->defined() && !(**f == *direct))
              throw internal_disagreement("quasideterminant correspondence forms differ from the direct value");
        res["forms"] = json{{"column", quasi_json(forms.column_form)}, {"row", quasi_json(forms.row_form)}};
      } else {
        res["forms"] = nullptr;
      }
      out["result"] = res;
      return direct.defined() ? Exit::ok : Exit::undefined;
    }
    case Command::rank: {
      json res{{"rank", rank(a)}};
      if (a.cols() <= 6 || s.allow_large)
        res["principal_minor_rank"] = principal_minor_rank(a.adjoint() * a, opts);
      out["result"] = res;
      return Exit::ok;
    }
    default:
      throw parse_error("command does not take a matrix");
  }
}

inline int run_verify(const JobSpec& s, json& out) {
  std::uint64_t seed = verify::default_seed;
  if (const char* env = std::getenv("NCDET_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw parse_error(std::string("NCDET_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  verify::Scale scale = verify::parse_scale(s.scale);
  verify::Report rep = verify::run(scale, seed, s.parallel == 0 ? 1 : s.parallel);
  json suites = json::array();
  json repros = json::array();
  for (const auto& r : rep.suites) {
    json e{{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}};
    if (!r.passed) {
      e["message"] = r.message;
      e["counterexample"] = r.counterexample;
      std::string path = s.repro_dir + "/ncdet-repro-" + r.name + ".json";
      std::ofstream f(path);
      f << io::dump(json{{"suite", r.name}, {"seed", seed}, {"message", r.message}, {"inputs", r.counterexample}});
      repros.push_back(path);
    }
    suites.push_back(std::move(e));
  }
  out["scale"] = s.scale;
  out["seed"] = seed;
  out["suite_count"] = rep.suites.size();
  out["suites"] = suites;
  out["passed"] = rep.passed();
  if (!repros.empty())
    out["reproducers"] = repros;
  return rep.passed() ? Exit::ok : Exit::disagreement;
}

} // namespace detail

inline RunResult run(const JobSpec& s) {
  json out{{"command", s.command}};
  int code = Exit::ok;
  try {
    Command cmd = parse_command(s.command);
    detail::require_indices(s, cmd == Command::rdet, cmd == Command::cdet, cmd == Command::quasidet,
                            cmd == Command::quasidet);
    if (cmd != Command::solve && cmd != Command::qsolve && s.side)
      throw parse_error("--side applies to solve and qsolve only");
    if (cmd == Command::verify) {
      code = detail::run_verify(s, out);
    } else {
      if (!s.input)
        throw parse_error("missing --in");
      std::string bytes = io::read_file(*s.input);
      out["input"] = json{{"path", *s.input}, {"sha256", sha256_hex(bytes)}};
      json doc = io::parse_json(bytes);
      const json& scalar_doc =
          (cmd == Command::solve || cmd == Command::qsolve) && doc.is_object() && doc.contains("A") ? doc["A"] : doc;
      code = io::scalar_of(scalar_doc) == "float64" ? detail::run_typed<Float64>(s, cmd, doc, out)
                                                    : detail::run_typed<Rational>(s, cmd, doc, out);
    }
  } catch (const parse_error& e) {
    out["error"] = json{{"type", "parse"}, {"message", e.what()}};
    code = Exit::usage;
  } catch (const internal_disagreement& e) {
    out["error"] = json{{"type", "internal_disagreement"}, {"message", e.what()}};
    code = Exit::disagreement;
  } catch (const elimination_stall& e) {
    out["error"] = json{{"type", "elimination_stall"}, {"message", e.what()}, {"certificate", e.certificate()}};
    code = Exit::precondition;
  } catch (const error& e) {
    out["error"] = json{{"type", "precondition"}, {"message", e.what()}};
    code = Exit::precondition;
  } catch (const std::exception& e) {
    out["error"] = json{{"type", "internal"}, {"message", e.what()}};
    code = Exit::disagreement;
  }
  out["exit_code"] = code;
  return RunResult{code, io::dump(out)};
}

} // namespace ncdet::cli
