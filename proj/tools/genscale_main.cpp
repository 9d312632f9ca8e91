// genscale: analyze, classify and exhaustively verify generated scales in Z_c.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "genscale/complement.hpp"
#include "genscale/dft.hpp"
#include "genscale/errors.hpp"
#include "genscale/generation.hpp"
#include "genscale/interval_vector.hpp"
#include "genscale/numtheory.hpp"
#include "genscale/rational.hpp"
#include "genscale/real_gen.hpp"
#include "genscale/scale.hpp"
#include "genscale/verify.hpp"

namespace {

using genscale::Scale;
using json = nlohmann::ordered_json;

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

json generators_json(const genscale::GeneratorReport& report) {
  json starts = json::object();
  json steps = json::array();
  for (const auto& [step, start_list] : report.generators) {
    steps.push_back(step);
    starts[std::to_string(step)] = start_list;
  }
  return json{{"steps", steps}, {"count", report.count}, {"starts", starts}};
}

json classification_json(const genscale::Classification& cls) {
  json j{{"kind", genscale::kind_name(cls.kind)}, {"predicted", cls.predicted_count}};
  if (cls.witness_gcd) {
    j["m"] = *cls.witness_gcd;
  } else {
    j["m"] = nullptr;
  }
  return j;
}

json seminorm_json(const genscale::Seminorm& sn) {
  return json{{"value", sn.value}, {"argmax", sn.argmax}};
}

json chopin_json(const genscale::ChopinReport& report, const Scale& b) {
  json j;
  j["both_generated"] = report.both_generated;
  j["shared_steps"] = report.shared_steps;
  j["complement"] = genscale::format_scale(b);
  if (report.embedding) {
    j["embedding"] = json{{"direction", genscale::embed_direction_name(report.embedding->direction)},
                          {"tau", report.embedding->tau}};
  } else {
    j["embedding"] = nullptr;
  }
  return j;
}

json spectrum_pairs(const genscale::Spectrum& sp) {
  json pairs = json::array();
  for (const auto& z : sp.coeffs) pairs.push_back(json::array({z.real(), z.imag()}));
  return pairs;
}

std::string svg_point(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f,%.2f", x, y);
  return buf;
}

// 512x512 canvas, vertex 0 at the top, indices increasing clockwise.
std::string polygon_svg(const Scale& s, std::optional<int> generator) {
  const int c = s.c;
  const double cx = 256.0, cy = 256.0, radius = 200.0;
  auto vx = [&](int k) { return cx + radius * std::sin(2.0 * std::numbers::pi * k / c); };
  auto vy = [&](int k) { return cy - radius * std::cos(2.0 * std::numbers::pi * k / c); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  out += "  <rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  if (c >= 3) {
    out += "  <polygon points=\"";
    for (int k = 0; k < c; ++k) {
      if (k) out += " ";
      out += svg_point(vx(k), vy(k));
    }
    out += "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  } else {
    out += "  <circle cx=\"256.00\" cy=\"256.00\" r=\"200.00\" fill=\"none\" "
           "stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  if (generator && !s.empty()) {
    const int f = genscale::mod_reduce(*generator, c);
    const auto report = genscale::enumerate_generators(s);
    auto it = report.generators.find(f);
    if (it != report.generators.end()) {
      // actual generation path from the smallest valid start
      out += "  <polyline points=\"";
      int x = it->second.front();
      for (int k = 0; k < s.size(); ++k) {
        if (k) out += " ";
        out += svg_point(vx(x), vy(x));
        x = genscale::mod_reduce(x + f, c);
      }
      out += "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    } else {
      // not a generator of this scale: show every f-chord inside it instead
      for (int x : s.pcs) {
        const int y = genscale::mod_reduce(x + f, c);
        if (!s.contains(y)) continue;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                      "stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n",
                      vx(x), vy(x), vx(y), vy(y));
        out += buf;
      }
    }
  }

  for (int k = 0; k < c; ++k) {
    char buf[160];
    const bool member = s.contains(k);
    std::snprintf(buf, sizeof(buf),
                  "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n",
                  vx(k), vy(k), member ? 7.0 : 3.0, member ? "#1f77b4" : "#bbbbbb");
    out += buf;
    const double lx = cx + (radius + 24.0) * std::sin(2.0 * std::numbers::pi * k / c);
    const double ly = cy - (radius + 24.0) * std::cos(2.0 * std::numbers::pi * k / c);
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"14\" "
                  "text-anchor=\"middle\" dominant-baseline=\"middle\">%d</text>\n",
                  lx, ly, k);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generated-scale analysis in cyclic groups"};
  app.require_subcommand(1);
  app.add_flag("--json-pretty", g_pretty, "Pretty-print JSON output");

  std::string scale_text;
  std::string alpha_text, x_text;
  int arg_c = 12, arg_d = 7;
  int cmax = 24;
  double tolerance = genscale::kDftTolerance;
  std::string verify_which;

  auto* cmd_analyze = app.add_subcommand("analyze", "Combined JSON report for a scale");
  cmd_analyze->add_option("scale", scale_text, "Scale as \"c:p1,p2,...\"")->required();

  auto* cmd_generators = app.add_subcommand("generators", "Every generator of a scale");
  cmd_generators->add_option("scale", scale_text)->required();

  auto* cmd_classify = app.add_subcommand("classify", "Structural classification");
  cmd_classify->add_option("scale", scale_text)->required();

  auto* cmd_ivec = app.add_subcommand("ivec", "Oriented interval vector");
  cmd_ivec->add_option("scale", scale_text)->required();

  auto* cmd_dft = app.add_subcommand("dft", "Spectrum, magnitudes and coprime seminorm");
  cmd_dft->add_option("scale", scale_text)->required();
  cmd_dft->add_option("--tolerance", tolerance, "Argmax tie tolerance")->capture_default_str();

  auto* cmd_complement = app.add_subcommand("complement", "Complement / shared-generator report");
  cmd_complement->add_option("scale", scale_text)->required();

  auto* cmd_jset = app.add_subcommand("jset", "Floor-generated scale from rational alpha");
  cmd_jset->add_option("alpha", alpha_text, "Rational \"p/q\"")->required();
  cmd_jset->add_option("c", arg_c, "Modulus")->required();
  cmd_jset->add_option("d", arg_d, "Length")->required();

  auto* cmd_pset = app.add_subcommand("pset", "Multiples of a rational point mod 1");
  cmd_pset->add_option("x", x_text, "Rational \"p/q\"")->required();
  cmd_pset->add_option("d", arg_d, "Length")->required();

  auto* cmd_verify = app.add_subcommand("verify", "Exhaustive theorem verification");
  cmd_verify->add_option("which", verify_which, "totient | classification | chopin | dftmax")
      ->required();
  cmd_verify->add_option("--cmax", cmax, "Largest modulus to sweep")->capture_default_str();
  cmd_verify->add_option("--c", arg_c, "Modulus (dftmax)")->capture_default_str();
  cmd_verify->add_option("--d", arg_d, "Cardinality (dftmax)")->capture_default_str();

  auto* cmd_svg = app.add_subcommand("polygon-svg", "Render the scale on a c-gon as SVG");
  cmd_svg->add_option("scale", scale_text)->required();
  int svg_gen_value = 0;
  auto* svg_gen_opt =
      cmd_svg->add_option("--generator", svg_gen_value, "Highlight one generation path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_analyze)) {
      const Scale s = genscale::parse_scale(scale_text);
      const auto report = genscale::enumerate_generators(s);
      const auto cls = genscale::classify(s);
      const auto iv = genscale::interval_vector(s);
      const auto sp = genscale::dft(s);
      json j;
      j["scale"] = genscale::format_scale(s);
      j["c"] = s.c;
      j["pcs"] = s.pcs;
      j["classification"] = classification_json(cls);
      j["generators"] = generators_json(report);
      j["interval_vector"] = iv.v;
      j["magnitudes"] = sp.magnitudes;
      if (s.c >= 2) {
        j["seminorm"] = seminorm_json(genscale::seminorm(s));
      } else {
        j["seminorm"] = nullptr;
      }
      if (s.size() >= 2 && s.size() <= s.c - 2) {
        const auto chopin = genscale::chopin_check(s);
        j["chopin"] = chopin_json(chopin, genscale::complement(s));
      } else {
        j["chopin"] = nullptr;
      }
      emit(j);
    } else if (app.got_subcommand(cmd_generators)) {
      const Scale s = genscale::parse_scale(scale_text);
      emit(generators_json(genscale::enumerate_generators(s)));
    } else if (app.got_subcommand(cmd_classify)) {
      const Scale s = genscale::parse_scale(scale_text);
      emit(classification_json(genscale::classify(s)));
    } else if (app.got_subcommand(cmd_ivec)) {
      const Scale s = genscale::parse_scale(scale_text);
      emit(json(genscale::interval_vector(s).v));
    } else if (app.got_subcommand(cmd_dft)) {
      const Scale s = genscale::parse_scale(scale_text);
      const auto sp = genscale::dft(s);
      json j;
      j["spectrum"] = spectrum_pairs(sp);
      j["magnitudes"] = sp.magnitudes;
      if (s.c >= 2) {
        j["seminorm"] = seminorm_json(genscale::seminorm(s, tolerance));
      } else {
        j["seminorm"] = nullptr;
      }
      emit(j);
    } else if (app.got_subcommand(cmd_complement)) {
      const Scale s = genscale::parse_scale(scale_text);
      emit(chopin_json(genscale::chopin_check(s), genscale::complement(s)));
    } else if (app.got_subcommand(cmd_jset)) {
      const auto alpha = genscale::parse_rational(alpha_text);
      const Scale s = genscale::j_set(alpha, arg_c, arg_d);
      json j;
      j["alpha"] = alpha.str();
      j["c"] = arg_c;
      j["d"] = arg_d;
      j["scale"] = genscale::format_scale(s);
      j["pcs"] = s.pcs;
      if (arg_d >= 2) {
        const auto interval = genscale::alpha_stability_interval(alpha, arg_c, arg_d);
        j["stability"] = json{{"from", interval.first.str()}, {"to", interval.second.str()}};
      } else {
        j["stability"] = nullptr;
      }
      emit(j);
    } else if (app.got_subcommand(cmd_pset)) {
      const auto x = genscale::parse_rational_point(x_text);
      const auto ps = genscale::p_set(x, arg_d);
      json points = json::array();
      for (const auto& pt : ps.points) points.push_back(pt.str());
      json j;
      j["x"] = x.str();
      j["d"] = arg_d;
      j["points"] = points;
      if (arg_d >= 2 && x.den > 2LL * (arg_d - 1)) {
        json gens = json::array();
        for (const auto& y : genscale::p_generators_finite(ps)) gens.push_back(y.str());
        j["finite_generators"] = gens;
      } else {
        j["finite_generators"] = nullptr;
      }
      json inf = json::array();
      for (const auto& y : genscale::p_infinite_generators(x)) inf.push_back(y.str());
      j["infinite_generators"] = inf;
      emit(j);
    } else if (app.got_subcommand(cmd_verify)) {
      genscale::VerifyReport report;
      if (verify_which == "totient") {
        report = genscale::verify_totient_theorem(cmax);
      } else if (verify_which == "classification") {
        report = genscale::verify_classification(cmax);
      } else if (verify_which == "chopin") {
        report = genscale::verify_chopin(cmax);
      } else if (verify_which == "dftmax") {
        report = genscale::verify_dft_maximality(arg_c, arg_d);
      } else {
        std::cerr << "verify: unknown verifier '" << verify_which << "'\n";
        return 2;
      }
      genscale::write_jsonl(report, std::cout);
      return report.violations > 0 ? 1 : 0;
    } else if (app.got_subcommand(cmd_svg)) {
      const Scale s = genscale::parse_scale(scale_text);
      std::optional<int> generator;
      if (svg_gen_opt->count() > 0) generator = svg_gen_value;
      std::cout << polygon_svg(s, generator);
    }
  } catch (const genscale::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
