// Copyright 2026 The kerrwig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: evolve states, emit Wigner grids and
// photon-number distributions, reproduce the six reference panels, and run
// the cross-validation battery.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kerrwig/channel.hpp"
#include "kerrwig/errors.hpp"
#include "kerrwig/photon_stats.hpp"
#include "kerrwig/verify.hpp"
#include "kerrwig/wigner.hpp"

namespace {

using kerrwig::cplx;

// Parses "a+bi" / "a-bi" / "a" / "bi" with no spaces.
cplx parse_complex(const std::string& text) {
  if (text.empty()) throw kerrwig::ValidationError("empty complex literal");
  auto to_double = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw kerrwig::ValidationError("bad complex literal: " + text);
    }
    if (used != part.size())
      throw kerrwig::ValidationError("bad complex literal: " + text);
    return v;
  };
  if (text.back() != 'i') return cplx(to_double(text), 0.0);
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E')
      return cplx(to_double(body.substr(0, k)), to_double(body.substr(k)));
  }
  return cplx(0.0, to_double(body));
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Replaces `--config FILE` with the flags the file mirrors (`key = value`
// per line, `#` comments). Keys already given explicitly on the command
// line are skipped, so flags override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    std::size_t span = 0;
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw kerrwig::ValidationError("--config requires a file path");
      path = args[i + 1];
      span = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      span = 1;
    } else {
      continue;
    }
    std::ifstream is(path);
    if (!is) throw kerrwig::IoError("cannot open config file: " + path);
    std::vector<std::string> injected;
    for (std::string line; std::getline(is, line);) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw kerrwig::ValidationError("config: expected key = value: " + line);
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      if (key.empty())
        throw kerrwig::ValidationError("config: empty key: " + line);
      const std::string flag = "--" + key;
      const bool overridden =
          std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
          });
      if (overridden) continue;
      injected.push_back(flag);
      if (!val.empty()) injected.push_back(val);
    }
    args.erase(args.begin() + static_cast<long>(i),
               args.begin() + static_cast<long>(i + span));
    args.insert(args.begin() + static_cast<long>(i), injected.begin(),
                injected.end());
    break;
  }
  return args;
}

struct SourceOpts {
  std::string coherent;
  int fock = -1;
  std::string matrix;
  CLI::Option* o_coherent = nullptr;
  CLI::Option* o_fock = nullptr;
  CLI::Option* o_matrix = nullptr;

  void add(CLI::App* cmd) {
    o_coherent = cmd->add_option("--coherent", coherent,
                                 "coherent amplitude, e.g. 2+0.5i");
    o_fock = cmd->add_option("--fock", fock, "Fock number state |s><s|");
    o_matrix = cmd->add_option("--matrix", matrix,
                               "fock-density v1 file with the initial state");
  }

  kerrwig::InitialState build(int n_cut) const {
    const int given = static_cast<int>(o_coherent->count() > 0) +
                      static_cast<int>(o_fock->count() > 0) +
                      static_cast<int>(o_matrix->count() > 0);
    if (given != 1)
      throw kerrwig::ValidationError(
          "exactly one of --coherent, --fock, --matrix is required");
    if (o_coherent->count()) return kerrwig::Coherent{parse_complex(coherent)};
    if (o_fock->count()) {
      if (fock < 0) throw kerrwig::ValidationError("--fock must be >= 0");
      return kerrwig::Number{fock};
    }
    auto rho = kerrwig::DensityMatrix::load_file(matrix);
    (void)n_cut;
    return rho;
  }
};

struct ParamOpts {
  double chi = 0.0, gamma = 0.0, t = 0.0;
  double chi_t = 0.0, gamma_t = 0.0;
  CLI::Option* o_chi = nullptr;
  CLI::Option* o_gamma = nullptr;
  CLI::Option* o_t = nullptr;
  CLI::Option* o_chi_t = nullptr;
  CLI::Option* o_gamma_t = nullptr;

  void add(CLI::App* cmd) {
    o_chi = cmd->add_option("--chi", chi, "Kerr coupling");
    o_gamma = cmd->add_option("--gamma", gamma, "decay rate");
    o_t = cmd->add_option("--t", t, "evolution time");
    o_chi_t = cmd->add_option("--chi-t", chi_t, "dimensionless chi*t");
    o_gamma_t = cmd->add_option("--gamma-t", gamma_t, "dimensionless gamma*t");
  }

  kerrwig::ChannelParams build() const {
    const bool physical = o_chi->count() || o_gamma->count() || o_t->count();
    const bool dimensionless = o_chi_t->count() || o_gamma_t->count();
    if (physical && dimensionless)
      throw kerrwig::ValidationError(
          "--chi/--gamma/--t cannot be mixed with --chi-t/--gamma-t");
    kerrwig::ChannelParams p;
    if (dimensionless) {
      // Only the products chi*t and gamma*t enter the evolution.
      p.chi = chi_t;
      p.gamma = gamma_t;
      p.t = 1.0;
    } else {
      p.chi = chi;
      p.gamma = gamma;
      p.t = t;
    }
    p.validate();
    return p;
  }
};

kerrwig::DensityMatrix initial_density(const kerrwig::InitialState& source,
                                       int n_cut) {
  if (const auto* c = std::get_if<kerrwig::Coherent>(&source))
    return kerrwig::DensityMatrix::coherent(c->z, n_cut);
  if (const auto* f = std::get_if<kerrwig::Number>(&source))
    return kerrwig::DensityMatrix::fock(f->s, n_cut);
  return std::get<kerrwig::DensityMatrix>(source);
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact Kerr+loss evolution of a single bosonic mode\n"
      "Every subcommand also accepts --config FILE (one `key = value` per\n"
      "line, `#` comments) mirroring its flags; explicit flags win."};
  app.require_subcommand(1);

  SourceOpts src_e, src_w, src_p;
  ParamOpts par_e, par_w, par_p;

  auto* evolve = app.add_subcommand(
      "evolve", "closed-form density-matrix evolution, fock-density v1 out");
  src_e.add(evolve);
  par_e.add(evolve);
  int e_ncut = 0, e_lmax = -1;
  double e_tol = 1e-12;
  std::string e_out = "rho.txt";
  evolve->add_option("--n-cut", e_ncut, "Fock truncation (0 = automatic)");
  evolve->add_option("--l-max", e_lmax, "loss-sum cutoff (-1 = exact)");
  evolve->add_option("--tol", e_tol, "truncation-tail tolerance");
  evolve->add_option("-o,--output", e_out, "output path");

  auto* wigner = app.add_subcommand(
      "wigner", "evolved Wigner function on a square grid, CSV out");
  src_w.add(wigner);
  par_w.add(wigner);
  double w_window = 4.0, w_tol = 1e-9;
  int w_res = 201, w_ncut = 0;
  std::string w_out = "wigner.csv";
  wigner->add_option("--window", w_window, "half-width of the square window");
  wigner->add_option("--res", w_res, "grid points per axis");
  wigner->add_option("--n-cut", w_ncut, "Fock truncation for --matrix input");
  wigner->add_option("--tol", w_tol, "series tolerance per point");
  wigner->add_option("-o,--output", w_out, "output CSV path");

  auto* pn = app.add_subcommand(
      "pn", "photon-number distribution of the evolved state, CSV out");
  src_p.add(pn);
  par_p.add(pn);
  int p_smax = 32;
  double p_tol = 1e-12;
  std::string p_out = "pn.csv";
  pn->add_option("--n-cut", p_smax, "number of probabilities to emit");
  pn->add_option("--tol", p_tol, "quadrature tolerance");
  pn->add_option("-o,--output", p_out, "output CSV path");

  auto* fig1 = app.add_subcommand(
      "fig1", "six reference grids: z=2, gamma=0, chi*t in "
              "{0, 0.04, 0.06, 0.08, 0.1, 0.2}");
  int f_res = 201;
  double f_tol = 1e-9;
  std::string f_out = ".";
  fig1->add_option("--res", f_res, "grid points per axis");
  fig1->add_option("--tol", f_tol, "series tolerance per point");
  fig1->add_option("-o,--output", f_out, "output directory");

  auto* verify = app.add_subcommand(
      "verify", "run the full cross-validation battery");
  int v_res = 201;
  verify->add_option("--res", v_res, "figure-grid resolution");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 parses back to front
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (evolve->parsed()) {
    const auto params = par_e.build();
    const auto rho0 = initial_density(src_e.build(e_ncut), e_ncut);
    const auto rho = kerrwig::evolve_density(rho0, params, e_lmax, e_tol);
    rho.save_file(e_out);
    std::fprintf(stderr, "trace          %.15g\n", rho.trace());
    std::fprintf(stderr, "min-eigenvalue %.15g\n", rho.min_eigenvalue());
    std::fprintf(stderr, "truncation     n_cut=%d tail<=%.3g\n", rho.n_cut(),
                 e_tol);
    return 0;
  }

  if (wigner->parsed()) {
    const auto params = par_w.build();
    const auto source = src_w.build(w_ncut);
    kerrwig::Window win{-w_window, w_window, -w_window, w_window};
    const auto grid =
        kerrwig::wigner_grid(source, params, win, w_res, w_res, w_tol);
    grid.save_csv(w_out);
    std::fprintf(stderr, "integral %.15g  min %.15g  max-order %d\n",
                 grid.integral(), grid.min_value(), grid.max_order_used);
    return 0;
  }

  if (pn->parsed()) {
    const auto params = par_p.build();
    const auto source = src_p.build(p_smax);
    kerrwig::PnDistribution dist;
    dist.probs.resize(p_smax);
    double sum = 0.0;
    for (int s = 0; s < p_smax; ++s) {
      double p;
      if (const auto* c = std::get_if<kerrwig::Coherent>(&source))
        p = kerrwig::pn_coherent_closed(c->z, s, params);
      else
        p = kerrwig::pn_overlap(source, s, params, p_tol);
      dist.probs[s] = p;
      sum += p;
    }
    dist.tail = 1.0 - sum;
    dist.save_csv(p_out);
    std::fprintf(stderr, "mean %.15g  tail %.3g\n", dist.mean(), dist.tail);
    return 0;
  }

  if (fig1->parsed()) {
    const double chi_t[6] = {0.0, 0.04, 0.06, 0.08, 0.1, 0.2};
    const kerrwig::InitialState source = kerrwig::Coherent{cplx(2.0, 0.0)};
    kerrwig::Window win{-4.0, 4.0, -4.0, 4.0};
    for (int k = 0; k < 6; ++k) {
      kerrwig::ChannelParams params{chi_t[k], 0.0, 1.0};
      const auto grid =
          kerrwig::wigner_grid(source, params, win, f_res, f_res, f_tol);
      const std::string path =
          f_out + "/fig1" + static_cast<char>('a' + k) + ".csv";
      grid.save_csv(path);
      std::fprintf(stderr, "%s chi*t=%.2f integral %.12g min %.12g\n",
                   path.c_str(), chi_t[k], grid.integral(), grid.min_value());
    }
    return 0;
  }

  // verify
  const auto results = kerrwig::run_acceptance(&std::cout, v_res);
  return kerrwig::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kerrwig::ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return 2;
  } catch (const kerrwig::TruncationError& e) {
    std::fprintf(stderr, "truncation failure: %s\n", e.what());
    return 2;
  } catch (const kerrwig::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 3;
  } catch (const kerrwig::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
