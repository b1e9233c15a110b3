#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "CLI11.hpp"
#include "cpaths/bbs.hpp"
#include "cpaths/kostka.hpp"
#include "cpaths/statistics.hpp"
#include "cpaths/sweep.hpp"
#include "cpaths/verify.hpp"

using namespace cpaths;
using nlohmann::json;

namespace {

struct Output {
  std::string format = "text";
  std::string out_file;

  void emit(const std::string& text, const json& j) const {
    std::string payload = format == "json" ? j.dump() : text;
    if (out_file.empty()) {
      std::cout << payload << "\n";
    } else {
      std::ofstream f(out_file);
      f << payload << "\n";
    }
  }
};

void add_common(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.out_file, "Write output to a file");
}

json path_json(const TensorPath& p) {
  json a = json::array();
  for (auto& f : p.factors) a.push_back(f.t.rows);
  return a;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

int default_jobs() {
  if (const char* env = std::getenv("CPATHS_JOBS")) return std::atoi(env);
  return 0;
}

long long compute_stat(const std::string& name, const TensorPath& p,
                       const Composition& mu, int r, int s) {
  if (name == "charge") return charge_path(p);
  if (name == "cocharge") {
    Tabloid t = tabloid_from_path(p);
    return cocharge(reading_word(t));
  }
  if (name == "maj") return maj_stat(p);
  if (name == "ebar") return ebar_stat(p);
  if (name == "tau") return tau_stat(p);
  if (name == "tau_rs") return tau_rs(p, r, s);
  if (mu.empty())
    throw std::invalid_argument("statistic '" + name + "' requires --mu");
  const Word w = p.as_word();
  if (name == "tau_mu") return tau_mu(w, mu);
  if (name == "c_mu") return c_mu(w, mu);
  if (name == "inv_mu") return haglund_inv(haglund_filling(w, mu));
  if (name == "maj_mu") return haglund_maj(haglund_filling(w, mu));
  throw std::invalid_argument("unknown statistic: " + name);
}

void emit_reports(const std::vector<VerificationReport>& reps,
                  const Output& out) {
  json arr = json::array();
  std::string text;
  int fails = 0;
  for (auto& r : reps) {
    arr.push_back(r.to_json());
    if (!text.empty()) text += "\n";
    text += r.to_text();
    if (!r.pass) ++fails;
  }
  text += "\n" + std::to_string(reps.size() - fails) + "/" +
          std::to_string(reps.size()) + " checks passed";
  out.emit(text, arr);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Crystal path combinatorics toolkit"};
  app.require_subcommand(1);

  // ---- rmatrix ----
  Output rm_out;
  std::string rm_left, rm_right;
  int rm_dleft = 0, rm_dright = 0;
  bool rm_affine = false;
  auto* rm = app.add_subcommand("rmatrix", "Apply the combinatorial R");
  rm->add_option("--left", rm_left, "Left tableau, e.g. [[1,1],[2,2]]")
      ->required();
  rm->add_option("--right", rm_right, "Right tableau")->required();
  rm->add_flag("--affine", rm_affine, "Track affine modes");
  rm->add_option("--dleft", rm_dleft, "Left mode (affine)");
  rm->add_option("--dright", rm_dright, "Right mode (affine)");
  add_common(rm, rm_out);

  // ---- stat ----
  Output st_out;
  std::string st_name, st_path, st_mu;
  int st_r = 1, st_s = 1;
  auto* st = app.add_subcommand("stat", "Evaluate a statistic on a path");
  st->add_option("--name", st_name, "Statistic name")
      ->required()
      ->check(CLI::IsMember({"charge", "cocharge", "maj", "ebar", "tau",
                             "tau_mu", "tau_rs", "c_mu", "inv_mu", "maj_mu"}));
  st->add_option("--path", st_path, "Path literal")->required();
  st->add_option("--mu", st_mu, "Partition for mu-block statistics");
  st->add_option("--r", st_r, "r for tau_rs");
  st->add_option("--s", st_s, "s for tau_rs");
  add_common(st, st_out);

  // ---- bbs evolve ----
  Output bb_out;
  std::string bb_path, bb_alg = "ts";
  int bb_steps = 1, bb_a = 1, bb_l = -1;
  auto* bb = app.add_subcommand("bbs", "Box-ball system dynamics");
  auto* bbe = bb->add_subcommand("evolve", "Run the time evolution");
  bbe->add_option("--path", bb_path, "Initial path")->required();
  bbe->add_option("--steps", bb_steps, "Number of steps");
  bbe->add_option("--alg", bb_alg, "Evolution rule")
      ->check(CLI::IsMember({"carrier", "ts"}));
  bbe->add_option("--carrier-a", bb_a, "Carrier height");
  bbe->add_option("--carrier-l", bb_l, "Carrier width (-1 = stable limit)");
  add_common(bbe, bb_out);
  bb->require_subcommand(1);

  // ---- kostka ----
  Output ko_out;
  std::string ko_lambda, ko_mu, ko_rects;
  bool ko_foulkes = false, ko_macdonald = false;
  auto* ko = app.add_subcommand("kostka", "Kostka-type polynomials");
  ko->add_option("--lambda", ko_lambda, "Shape partition")->required();
  ko->add_option("--mu", ko_mu, "Content partition");
  ko->add_flag("--foulkes", ko_foulkes, "Kostka-Foulkes polynomial");
  ko->add_flag("--macdonald", ko_macdonald, "Modified Macdonald Ktilde");
  ko->add_option("--parabolic", ko_rects, "Rectangle sequence RxS,...");
  add_common(ko, ko_out);

  // ---- macdonald ----
  Output mac_out;
  std::string mac_mu, mac_lambda;
  auto* mac =
      app.add_subcommand("macdonald", "Modified Macdonald polynomial table");
  mac->add_option("--mu", mac_mu, "Partition mu")->required();
  mac->add_option("--lambda", mac_lambda, "Restrict to one lambda");
  add_common(mac, mac_out);

  // ---- gf ----
  Output gf_out;
  std::string gf_rects, gf_weight, gf_stat = "ebar", gf_mu, gf_alpha;
  int gf_r = 1, gf_s = 1, gf_nletters = 0;
  bool gf_highest = false;
  auto* gf = app.add_subcommand("gf", "Generating functions over paths");
  gf->add_option("--rects", gf_rects, "Rectangle sequence RxS,...");
  gf->add_option("--weight", gf_weight, "Restrict to this weight");
  gf->add_option("--stat", gf_stat, "Statistic")
      ->check(CLI::IsMember({"maj", "ebar", "tau", "tau_rs", "hhl"}));
  gf->add_option("--mu", gf_mu, "mu for the hhl statistic pair");
  gf->add_option("--alpha", gf_alpha, "Content for the hhl word sweep");
  gf->add_option("--r", gf_r, "r for tau_rs");
  gf->add_option("--s", gf_s, "s for tau_rs");
  gf->add_option("--nletters", gf_nletters, "Alphabet size");
  gf->add_flag("--highest", gf_highest, "Only classically highest paths");
  add_common(gf, gf_out);

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "Run identity checkers");
  ver->require_subcommand(1);
  struct VerifyOpts {
    Output out;
    int max_size = 6;
    int jobs = default_jobs();
    std::string rects, rects2, weight, rrange = "1", alphabet = "3";
    int s = 1, r = 1;
  };
  VerifyOpts vo;
  auto add_verify_sub = [&](const char* name, const char* desc) {
    auto* sub = ver->add_subcommand(name, desc);
    sub->add_option("--max-size", vo.max_size, "Sweep bound |mu|");
    sub->add_option("--jobs", vo.jobs, "Worker threads");
    sub->add_option("--rects", vo.rects, "Rectangle sequence");
    sub->add_option("--rects2", vo.rects2, "Second rectangle sequence");
    sub->add_option("--weight", vo.weight, "Weight partition");
    sub->add_option("--r", vo.rrange, "r value or range a..b");
    sub->add_option("--s", vo.s, "s value");
    sub->add_option("--alphabet", vo.alphabet, "Alphabet bound");
    add_common(sub, vo.out);
    return sub;
  };
  auto* v_thm = add_verify_sub("thm-main", "maj_mu generating function");
  auto* v_qt = add_verify_sub("qt", "(q,t) monomial expansion");
  auto* v_conj = add_verify_sub("conj-main", "tau_mu generating function");
  auto* v_hhl = add_verify_sub("hhl", "highest-path fillings vs Ktilde");
  auto* v_ctau = add_verify_sub("conj-tau", "tau^{r,s} generating function");
  auto* v_cebar = add_verify_sub("conj-ebar", "Ebar generating function");
  auto* v_etau = add_verify_sub("e-tau", "Ebar = C - tau^{r,s}");
  auto* v_reg = add_verify_sub("reg", "regularization constant");
  auto* v_gen = add_verify_sub("genmain", "rectangle-weight expansion");
  auto* v_dual = add_verify_sub("duality", "parabolic Kostka duality");

  // ---- rsk ----
  Output rk_out;
  std::string rk_matrix, rk_path;
  auto* rk = app.add_subcommand("rsk", "RSK and plane partitions");
  rk->add_option("--matrix", rk_matrix, "Rows a,b,c;d,e,f;...");
  rk->add_option("--path", rk_path, "Single-row-factor path");
  add_common(rk, rk_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (rm->parsed()) {
    auto b = rect_from_ssyt(parse_ssyt(rm_left));
    auto b2 = rect_from_ssyt(parse_ssyt(rm_right));
    if (rm_affine) {
      auto [x, y] = affine_R({b, rm_dleft}, {b2, rm_dright});
      json j{{"first", x.b.t.rows},  {"first_mode", x.d},
             {"second", y.b.t.rows}, {"second_mode", y.d}};
      rm_out.emit(x.b.to_text() + "[" + std::to_string(x.d) + "] (x) " +
                      y.b.to_text() + "[" + std::to_string(y.d) + "]",
                  j);
    } else {
      auto res = combinatorial_R(b, b2);
      json j{{"first", res.first.t.rows},
             {"second", res.second.t.rows},
             {"H", res.H}};
      rm_out.emit(res.first.to_text() + " (x) " + res.second.to_text() +
                      "  H=" + std::to_string(res.H),
                  j);
    }
    return 0;
  }

  if (st->parsed()) {
    TensorPath p = parse_path(st_path);
    Composition mu =
        st_mu.empty() ? Composition{} : parse_int_list(st_mu);
    long long v = compute_stat(st_name, p, mu, st_r, st_s);
    st_out.emit(std::to_string(v), json{{"name", st_name}, {"value", v}});
    return 0;
  }

  if (bb->parsed()) {
    TensorPath p = parse_path(bb_path);
    std::vector<std::string> lines;
    json rows = json::array();
    if (bb_alg == "ts") {
      // evolve on a padded tape, display the original window
      Word w = p.as_word();
      size_t L = w.size();
      w.insert(w.end(), (size_t)bb_steps * L, 1);
      for (const Word& full : ts_evolution(w, bb_steps)) {
        TensorPath q = path_from_word(Word(full.begin(), full.begin() + L),
                                      p.nletters);
        lines.push_back(q.to_text());
        rows.push_back(path_json(q));
      }
    } else {
      std::vector<TensorPath> evo =
          bb_l > 0 ? carrier_evolution(p, bb_a, bb_l, bb_steps)
                   : [&] {
                       std::vector<TensorPath> e{p};
                       for (int t = 0; t < bb_steps; ++t)
                         e.push_back(t_infinity(e.back(), bb_a));
                       return e;
                     }();
      for (auto& q : evo) {
        lines.push_back(q.to_text());
        rows.push_back(path_json(q));
      }
    }
    std::string text;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (i) text += "\n";
      text += "t=" + std::to_string(i) + ": " + lines[i];
    }
    bb_out.emit(text, json{{"evolution", rows}});
    return 0;
  }

  if (ko->parsed()) {
    Partition lambda = parse_int_list(ko_lambda);
    if (!ko_rects.empty()) {
      QPoly k = parabolic_kostka(lambda, parse_rects(ko_rects));
      ko_out.emit(k.to_text(), k.to_json());
    } else if (ko_macdonald) {
      QTPoly k = kostka_macdonald(lambda, parse_int_list(ko_mu));
      ko_out.emit(k.to_text(), k.to_json());
    } else if (ko_foulkes) {
      QPoly k = kostka_foulkes(lambda, parse_int_list(ko_mu));
      ko_out.emit(k.to_text(), k.to_json());
    } else {
      long long k = kostka_number(lambda, parse_int_list(ko_mu));
      ko_out.emit(std::to_string(k), json{{"kostka", k}});
    }
    return 0;
  }

  if (mac->parsed()) {
    Partition mu = parse_int_list(mac_mu);
    if (!mac_lambda.empty()) {
      QTPoly k = kostka_macdonald(parse_int_list(mac_lambda), mu);
      mac_out.emit(k.to_text(), k.to_json());
      return 0;
    }
    json j = json::object();
    std::string text;
    for (auto& [lam, kt] : kostka_macdonald_all(mu)) {
      j["(" + format_int_list(lam) + ")"] = kt.to_json();
      if (!text.empty()) text += "\n";
      text += "(" + format_int_list(lam) + "): " + kt.to_text();
    }
    mac_out.emit(text, j);
    return 0;
  }

  if (gf->parsed()) {
    if (gf_stat == "hhl") {
      if (gf_mu.empty() || gf_alpha.empty())
        throw std::invalid_argument("gf --stat hhl needs --mu and --alpha");
      QTPoly g =
          hhl_monomial_gf(parse_int_list(gf_mu), parse_int_list(gf_alpha));
      gf_out.emit(g.to_text(), g.to_json());
      return 0;
    }
    if (gf_rects.empty())
      throw std::invalid_argument("gf needs --rects for path statistics");
    RectangleSequence R = parse_rects(gf_rects);
    Partition lam =
        gf_weight.empty() ? Partition{} : trimmed(parse_int_list(gf_weight));
    int nletters = gf_nletters > 0 ? gf_nletters : (int)lam.size();
    if (nletters == 0)
      throw std::invalid_argument("gf needs --weight or --nletters");
    PathFilter filter = [&](const TensorPath& p) {
      if (!lam.empty() && trimmed(p.weight()) != lam) return false;
      return !gf_highest || is_highest(p);
    };
    PathStat stat;
    if (gf_stat == "maj")
      stat = [](const TensorPath& p) { return maj_stat(p); };
    else if (gf_stat == "ebar")
      stat = [](const TensorPath& p) { return ebar_stat(p); };
    else if (gf_stat == "tau")
      stat = [](const TensorPath& p) { return tau_stat(p); };
    else
      stat = [&](const TensorPath& p) { return tau_rs(p, gf_r, gf_s); };
    QPoly g = paths_gf_serial(R, nletters, filter, stat);
    gf_out.emit(g.to_text(), g.to_json());
    return 0;
  }

  if (ver->parsed()) {
    std::vector<VerificationReport> reps;
    if (v_thm->parsed() || v_qt->parsed() || v_conj->parsed()) {
      for (int n = 1; n <= vo.max_size; ++n)
        for (auto& mu : partitions_of(n))
          for (auto& alpha : compositions_of(n)) {
            if (v_thm->parsed()) reps.push_back(check_theorem_main(alpha, mu));
            if (v_qt->parsed()) reps.push_back(check_qt_expansion(alpha, mu));
            if (v_conj->parsed())
              reps.push_back(check_conjecture_main(alpha, mu));
          }
    } else if (v_hhl->parsed()) {
      for (int n = 1; n <= vo.max_size; ++n)
        for (auto& mu : partitions_of(n))
          for (auto& lam : partitions_of(n))
            reps.push_back(check_hhl_kostka(lam, mu));
    } else if (v_ctau->parsed()) {
      auto [rlo, rhi] = parse_range(vo.rrange);
      for (int r = rlo; r <= rhi; ++r)
        reps.push_back(check_conj_tau(parse_rects(vo.rects),
                                      parse_int_list(vo.weight), r, vo.s,
                                      vo.jobs));
    } else if (v_cebar->parsed()) {
      reps.push_back(check_conj_ebar(parse_rects(vo.rects),
                                     parse_int_list(vo.weight), vo.jobs));
    } else if (v_etau->parsed()) {
      std::vector<TensorPath> paths;
      int nletters = std::stoi(vo.alphabet);
      for_each_path(parse_rects(vo.rects), nletters,
                    [&](const TensorPath& p) { paths.push_back(p); });
      auto [rlo, rhi] = parse_range(vo.rrange);
      reps.push_back(check_e_tau(paths, std::max(rlo, rhi), vo.s));
    } else if (v_reg->parsed()) {
      reps.push_back(check_regularization(parse_int_list(vo.weight)));
    } else if (v_gen->parsed()) {
      reps.push_back(check_conj_genmain(parse_rects(vo.rects),
                                        parse_rects(vo.rects2), vo.jobs));
    } else if (v_dual->parsed()) {
      reps.push_back(check_duality(parse_rects(vo.rects),
                                   parse_int_list(vo.weight), vo.jobs));
    }
    emit_reports(reps, vo.out);
    for (auto& r : reps)
      if (!r.pass) return 1;
    return 0;
  }

  if (rk->parsed()) {
    TransportationMatrix m;
    if (!rk_matrix.empty()) {
      size_t i = 0;
      while (i <= rk_matrix.size()) {
        size_t j = rk_matrix.find(';', i);
        if (j == std::string::npos) j = rk_matrix.size();
        m.m.push_back(parse_int_list(rk_matrix.substr(i, j - i)));
        i = j + 1;
        if (j == rk_matrix.size()) break;
      }
    } else if (!rk_path.empty()) {
      TensorPath p = parse_path(rk_path);
      m = matrix_from_tabloid(tabloid_from_path(p), (int)p.factors.size());
    } else {
      throw std::invalid_argument("rsk needs --matrix or --path");
    }
    auto [P, Q] = rsk(m);
    PlanePartition pp = plane_partition_from_pair(P, Q);
    json j{{"P", P.rows}, {"Q", Q.rows}, {"plane_partition", pp.rows}};
    rk_out.emit("P = " + P.to_text() + "\nQ = " + Q.to_text() +
                    "\nPP = " + json(pp.rows).dump(),
                j);
    return 0;
  }

  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
