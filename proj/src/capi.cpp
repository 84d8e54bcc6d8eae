#include "sgt/sgt.h"

#include <cstdio>
#include <sstream>
#include <string>

#include "sgt/json_io.hpp"
#include "sgt/kernels.hpp"
#include "sgt/randmat.hpp"
#include "sgt/rng.hpp"
#include "sgt/sim_continuous.hpp"
#include "sgt/sim_discrete.hpp"
#include "sgt/stats.hpp"
#include "sgt/verify.hpp"

struct sgt_buffer {
  std::string data;
};

namespace {

thread_local std::string g_last_error;

using sgt::Coord;
using sgt::Json;
using sgt::Rational;
using sgt::Shape;

int finish(std::string payload, sgt_buffer** out) {
  auto* buf = new sgt_buffer{std::move(payload)};
  *out = buf;
  return SGT_OK;
}

template <class Fn>
int guarded(Fn&& fn, sgt_buffer** out) {
  if (out == nullptr) {
    g_last_error = "null output buffer pointer";
    return SGT_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    return finish(fn(), out);
  } catch (const sgt::OverflowError& e) {
    g_last_error = e.what();
    return SGT_ERROR_OVERFLOW;
  } catch (const sgt::DomainError& e) {
    g_last_error = e.what();
    return SGT_ERROR_DOMAIN;
  } catch (const sgt::ShapeError& e) {
    g_last_error = e.what();
    return SGT_ERROR_DOMAIN;
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return SGT_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SGT_ERROR_INTERNAL;
  }
}

Json parse_request(const char* request_json) {
  if (request_json == nullptr) throw Json::parse_error::create(101, 0, "null request", nullptr);
  return Json::parse(request_json);
}

bool exact_mode(const Json& req) {
  const std::string mode = req.value("mode", "float");
  if (mode == "exact") return true;
  if (mode == "float") return false;
  throw sgt::DomainError("mode must be 'exact' or 'float'");
}

// Scalar literals: exact mode accepts integers and "p/q" strings only.
Rational scalar_field_exact(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return sgt::parse_rational(v.get<std::string>());
  throw sgt::DomainError("exact mode requires integer or \"p/q\" scalar literals");
}

double scalar_field_float(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return sgt::to_double(sgt::parse_rational(v.get<std::string>()));
  throw sgt::DomainError("scalar literals must be numbers or \"p/q\" strings");
}

template <class T>
std::vector<T> q_field(const Json& req);

template <>
std::vector<Rational> q_field<Rational>(const Json& req) {
  std::vector<Rational> q;
  for (const auto& v : req.at("q")) q.push_back(scalar_field_exact(v));
  return q;
}

template <>
std::vector<double> q_field<double>(const Json& req) {
  std::vector<double> q;
  for (const auto& v : req.at("q")) q.push_back(scalar_field_float(v));
  return q;
}

template <class T>
T alpha_field(const Json& req);
template <>
Rational alpha_field<Rational>(const Json& req) {
  return scalar_field_exact(req.at("alpha"));
}
template <>
double alpha_field<double>(const Json& req) {
  return scalar_field_float(req.at("alpha"));
}

Json mass_to_json(const Rational& v) { return sgt::format_scalar(v); }
Json mass_to_json(double v) { return v; }

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
Json kernel_row_impl(const Json& req) {
  const int k = req.at("k").get<int>();
  const std::string kind = req.at("kernel").get<std::string>();
  const double eps = req.value("eps", 1e-12);
  sgt::ModelParams<T> params(k, q_field<T>(req), alpha_field<T>(req));
  sgt::SchurCache<T> cache(params.q);
  Json entries = Json::array();
  Json from;
  double tail = 0.0;

  if (kind == "nu") {
    const auto pd = to_double_params(params);
    std::int64_t m_max = req.value("m_max", std::int64_t{-1});
    if (m_max < 0) m_max = sgt::geometric_sum_cutoff(pd, eps, &tail);
    from = Json::object();
    for (std::int64_t m = 0; m <= m_max; ++m)
      entries.push_back(
          {{"to", m}, {"mass", mass_to_json(sgt::geometric_sum_law(params, cache, m))}});
  } else if (kind == "mu") {
    const Shape lambda = sgt::shape_from_json(req.at("lambda"));
    from = sgt::shape_to_json(lambda);
    for (const auto& [beta, mass] :
         sgt::pieri_kernel_row(params, cache, lambda, req.at("m").get<std::int64_t>()))
      entries.push_back({{"to", sgt::shape_to_json(beta)}, {"mass", mass_to_json(mass)}});
  } else if (kind == "m") {
    const Shape lambda = sgt::shape_from_json(req.at("lambda"));
    from = sgt::shape_to_json(lambda);
    for (const auto& [beta, mass] : sgt::lower_row_measure(k, cache, lambda))
      entries.push_back({{"to", sgt::shape_to_json(beta)}, {"mass", mass_to_json(mass)}});
  } else if (kind == "P") {
    const Shape lambda = sgt::shape_from_json(req.at("lambda"));
    from = sgt::shape_to_json(lambda);
    auto row = sgt::row_kernel_mass(params, cache, lambda, eps);
    tail = row.tail_bound;
    for (const auto& [beta, mass] : row)
      entries.push_back({{"to", sgt::shape_to_json(beta)}, {"mass", mass_to_json(mass)}});
  } else if (kind == "S") {
    const Shape lambda = sgt::shape_from_json(req.at("lambda"));
    from = sgt::shape_to_json(lambda);
    auto row = sgt::pair_kernel_mass(params, cache, lambda, eps);
    tail = row.tail_bound;
    for (const auto& [cb, mass] : row)
      entries.push_back({{"to", Json{{"c", sgt::shape_to_json(cb.first)},
                                     {"beta", sgt::shape_to_json(cb.second)}}},
                         {"mass", mass_to_json(mass)}});
  } else if (kind == "Q") {
    const auto& f = req.at("from");
    sgt::CoupledState state{sgt::shape_from_json(f.at("u")), sgt::shape_from_json(f.at("z")),
                            sgt::shape_from_json(f.at("y"))};
    from = Json{{"u", sgt::shape_to_json(state.lower)},
                {"z", sgt::shape_to_json(state.half)},
                {"y", sgt::shape_to_json(state.full)}};
    auto row = sgt::coupled_kernel_mass(params, cache, state, eps);
    tail = row.tail_bound;
    for (const auto& [to, mass] : row)
      entries.push_back({{"to", Json{{"x", sgt::shape_to_json(to.lower)},
                                     {"zp", sgt::shape_to_json(to.half)},
                                     {"yp", sgt::shape_to_json(to.full)}}},
                         {"mass", mass_to_json(mass)}});
  } else {
    throw sgt::DomainError("kernel must be one of P,S,Q,mu,m,nu");
  }
  return Json{{"kernel", kind}, {"from", from}, {"entries", entries}, {"tail_bound", tail}};
}

}  // namespace

extern "C" {

const char* sgt_buffer_data(const sgt_buffer* buf) { return buf == nullptr ? "" : buf->data.c_str(); }
size_t sgt_buffer_size(const sgt_buffer* buf) { return buf == nullptr ? 0 : buf->data.size(); }
void sgt_buffer_free(sgt_buffer* buf) { delete buf; }

const char* sgt_version(void) { return "0.1.0"; }

const char* sgt_strerror(int code) {
  switch (code) {
    case SGT_OK:
      return "ok";
    case SGT_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case SGT_ERROR_DOMAIN:
      return "parameter outside its admissible range";
    case SGT_ERROR_OVERFLOW:
      return "enumeration cap exceeded";
    default:
      return "internal error";
  }
}

const char* sgt_last_error(void) { return g_last_error.c_str(); }

int sgt_schur(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        const int k = req.at("k").get<int>();
        const Shape lambda = sgt::shape_from_json(req.at("lambda"));
        Json res;
        if (exact_mode(req)) {
          res = Json{{"value", sgt::format_scalar(
                                   sgt::schur_eval<Rational>(k, lambda, q_field<Rational>(req)))}};
        } else {
          res = Json{{"value", sgt::schur_eval<double>(k, lambda, q_field<double>(req))}};
        }
        return res.dump();
      },
      out);
}

int sgt_pieri(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        const int r = req.at("r").get<int>();
        const Shape lambda = sgt::shape_from_json(req.at("lambda"));
        const auto dec = sgt::pieri_expand(r, lambda, req.at("m").get<std::int64_t>());
        Json terms = Json::array();
        for (const auto& [beta, mult] : dec.terms)
          terms.push_back({{"beta", sgt::shape_to_json(beta)}, {"mult", mult}});
        return Json{{"lambda", sgt::shape_to_json(dec.lambda)}, {"m", dec.m}, {"terms", terms}}
            .dump();
      },
      out);
}

int sgt_kernel_row(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        return (exact_mode(req) ? kernel_row_impl<Rational>(req) : kernel_row_impl<double>(req))
            .dump();
      },
      out);
}

int sgt_simulate_discrete(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        const int k = req.at("k").get<int>();
        sgt::ModelParams<double> params(k, q_field<double>(req), scalar_field_float(req.at("alpha")));
        const int horizon = req.at("horizon").get<int>();
        const long long trajectories = req.value("trajectories", 1LL);
        const std::uint64_t seed = req.value("seed", std::uint64_t{1});
        const int threads = req.value("threads", 0);
        const std::string record = req.value("record", "rows");
        const std::string format = req.value("format", "csv");
        if (record != "rows" && record != "full")
          throw sgt::DomainError("record must be 'rows' or 'full'");
        if (format != "csv" && format != "jsonl")
          throw sgt::DomainError("format must be 'csv' or 'jsonl'");

        const int nthreads = threads > 0 ? threads : sgt::default_thread_count();
        std::vector<std::string> parts(static_cast<std::size_t>(nthreads));
        sgt::parallel_chunks(trajectories, nthreads, [&](int chunk, long long begin, long long end) {
          std::ostringstream os;
          for (long long traj = begin; traj < end; ++traj) {
            sgt::run_discrete(params, horizon, sgt::stream_seed(seed, static_cast<std::uint64_t>(traj)),
                              [&](int t2, const sgt::GTPattern& s) {
                                const int row_lo = record == "full" ? 1 : k;
                                if (format == "csv") {
                                  for (int i = row_lo; i <= k; ++i)
                                    for (std::size_t j = 0; j < s.row(i).size(); ++j)
                                      os << traj << ',' << t2 << ',' << i << ',' << (j + 1) << ','
                                         << s.row(i)[j] << '\n';
                                } else {
                                  Json rec{{"trajectory", traj}, {"t2", t2}};
                                  if (record == "full")
                                    rec["pattern"] = sgt::pattern_to_json(s);
                                  else
                                    rec["row"] = sgt::shape_to_json(s.row(k));
                                  os << rec.dump() << '\n';
                                }
                              });
          }
          parts[static_cast<std::size_t>(chunk)] = os.str();
        });
        std::string payload;
        for (const auto& p : parts) payload += p;
        Json res{{"seed", seed}};
        if (format == "csv")
          res["csv"] = "# seed=" + std::to_string(seed) +
                       "\ntrajectory,time2,row,j,value\n" + payload;
        else
          res["jsonl"] = Json{{"meta", Json{{"seed", seed}, {"k", k}}}}.dump() + "\n" + payload;
        return res.dump();
      },
      out);
}

int sgt_simulate_continuous(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        const int k = req.at("k").get<int>();
        sgt::ContinuousParams params(k, q_field<double>(req));
        const double horizon = req.at("horizon").get<double>();
        const long long trajectories = req.value("trajectories", 1LL);
        const std::uint64_t seed = req.value("seed", std::uint64_t{1});
        const int threads = req.value("threads", 0);
        const bool record_events = req.value("record_events", true);

        const int nthreads = threads > 0 ? threads : sgt::default_thread_count();
        std::vector<std::string> ev_parts(static_cast<std::size_t>(nthreads));
        std::vector<std::string> fin_parts(static_cast<std::size_t>(nthreads));
        sgt::parallel_chunks(trajectories, nthreads, [&](int chunk, long long begin, long long end) {
          std::ostringstream ev, fin;
          for (long long traj = begin; traj < end; ++traj) {
            auto result = sgt::simulate_continuous(
                params, horizon, sgt::stream_seed(seed, static_cast<std::uint64_t>(traj)),
                record_events);
            for (const auto& e : result.events) {
              ev << Json{{"trajectory", traj},
                         {"time", e.time},
                         {"row", e.row},
                         {"j", e.j},
                         {"dir", e.direction},
                         {"applied", e.applied}}
                        .dump()
                 << '\n';
            }
            for (int i = 1; i <= k; ++i)
              for (std::size_t j = 0; j < result.final_state.row(i).size(); ++j)
                fin << traj << ',' << i << ',' << (j + 1) << ','
                    << result.final_state.row(i)[j] << '\n';
          }
          ev_parts[static_cast<std::size_t>(chunk)] = ev.str();
          fin_parts[static_cast<std::size_t>(chunk)] = fin.str();
        });
        std::string events, finals;
        for (const auto& p : ev_parts) events += p;
        for (const auto& p : fin_parts) finals += p;
        const std::string meta = Json{{"meta", Json{{"seed", seed}, {"k", k}}}}.dump();
        return Json{{"seed", seed},
                    {"events_jsonl", meta + "\n" + events},
                    {"final_csv", "# seed=" + std::to_string(seed) +
                                      "\ntrajectory,row,j,value\n" + finals}}
            .dump();
      },
      out);
}

int sgt_randmat(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        const int r = req.at("r").get<int>();
        if (r < 1 || r > 8) throw sgt::DomainError("randmat: r must lie in 1..8");
        const int steps = req.at("steps").get<int>();
        const long long trajectories = req.value("trajectories", 1LL);
        const std::uint64_t seed = req.value("seed", std::uint64_t{1});
        const int threads = req.value("threads", 0);

        const int nthreads = threads > 0 ? threads : sgt::default_thread_count();
        std::vector<std::string> parts(static_cast<std::size_t>(nthreads));
        sgt::parallel_chunks(trajectories, nthreads, [&](int chunk, long long begin, long long end) {
          std::ostringstream os;
          for (long long traj = begin; traj < end; ++traj) {
            sgt::Rng rng = sgt::Rng::stream(seed, static_cast<std::uint64_t>(traj));
            const auto rows = sgt::simulate_top_eigenvalues(r, steps, rng);
            for (int n = 0; n < steps; ++n)
              for (int i = 0; i < r; ++i)
                os << traj << ',' << (n + 1) << ',' << (i + 1) << ','
                   << fmt_double(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)])
                   << '\n';
          }
          parts[static_cast<std::size_t>(chunk)] = os.str();
        });
        std::string payload;
        for (const auto& p : parts) payload += p;
        return Json{{"seed", seed},
                    {"csv", "# seed=" + std::to_string(seed) + "\ntrajectory,step,i,value\n" +
                                payload}}
            .dump();
      },
      out);
}

int sgt_verify(const char* request_json, sgt_buffer** out) {
  return guarded(
      [&]() -> std::string {
        const Json req = parse_request(request_json);
        sgt::VerifyOptions opts;
        opts.samples = req.value("samples", 0LL);
        opts.seed = req.value("seed", std::uint64_t{20260810});
        opts.threads = req.value("threads", 0);
        const std::string claim = req.at("claim").get<std::string>();
        // Two claims honor explicit parameter overrides; the rest pin
        // everything to the acceptance configuration.
        sgt::VerificationReport rep;
        if (claim == "THM-7.2" && req.contains("k")) {
          rep = sgt::verify_theorem_7_2_at(req.at("k").get<int>(),
                                           scalar_field_float(req.at("alpha")),
                                           q_field<double>(req), req.value("n_steps", 2), opts);
        } else if (claim == "PROP-8.2" && req.contains("k")) {
          const int k = req.at("k").get<int>();
          rep = sgt::verify_intertwining(opts, k, k);
        } else {
          rep = sgt::verify_claim(claim, opts);
        }
        return sgt::report_to_json(rep).dump();
      },
      out);
}

}  // extern "C"
