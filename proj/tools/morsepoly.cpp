// Command-line front end. Every subcommand writes one document to stdout in
// the format chosen with --format; diagnostics go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "morsepoly/morse.hpp"
#include "morsepoly/snakes.hpp"
#include "morsepoly/strata5.hpp"
#include "morsepoly/strata6.hpp"

using namespace morsepoly;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string prec = "1e-12";
  int resolution = 256;
  std::uint64_t seed = 0;
  std::string output;  // svg file, stdout when empty
};

Rational parse_q(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
  }
}

std::vector<Rational> parse_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_q(item, what));
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

json passport_json(const Passport& p) { return json(std::vector<int>(p.begin(), p.end())); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw std::runtime_error("cannot write " + g.output);
  out << text;
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw UsageError("format '" + g.format + "' is not available for this command");
}

// SVG canvas for a rectangle of the parameter plane.
class Canvas {
 public:
  Canvas(double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {}

  double px(double x) const { return kMargin + (x - x0_) / (x1_ - x0_) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y0_) / (y1_ - y0_) * (kHeight - 2 * kMargin); }

  void polyline(const Polyline& l, const std::string& stroke, bool dashed) {
    if (l.points.size() < 2) return;
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
    if (dashed) body_ << " stroke-dasharray=\"5,4\"";
    body_ << " points=\"";
    for (auto [x, y] : l.points) body_ << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
    body_ << "\"/>\n";
  }
  void marker(double x, double y, const std::string& name) {
    body_ << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3.5\" fill=\"black\"/>\n";
    label(x, y, name, 6, -6);
  }
  void label(double x, double y, const std::string& text, double dx = 0, double dy = 0) {
    body_ << "<text x=\"" << fmt(px(x) + dx) << "\" y=\"" << fmt(py(y) + dy)
          << "\" font-family=\"sans-serif\" font-size=\"13\">" << text << "</text>\n";
  }
  void axes(const std::string& xname, const std::string& yname) {
    body_ << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
          << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#999\"/>\n";
    body_ << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12 << "\" font-family=\"sans-serif\" font-size=\"13\">"
          << xname << "</text>\n";
    body_ << "<text x=\"12\" y=\"" << kHeight / 2 << "\" font-family=\"sans-serif\" font-size=\"13\">" << yname
          << "</text>\n";
    auto tick = [&](double x, double y, const std::string& t, double dx, double dy) {
      body_ << "<text x=\"" << fmt(px(x) + dx) << "\" y=\"" << fmt(py(y) + dy)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">" << t << "</text>\n";
    };
    tick(x0_, y0_, fmt(x0_), -4, 16);
    tick(x1_, y0_, fmt(x1_), -12, 16);
    tick(x0_, y1_, fmt(y1_), -34, 4);
    tick(x0_, y0_, fmt(y0_), -34, 0);
  }
  std::string str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" width=\""
       << kWidth << "\" height=\"" << kHeight << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  static constexpr int kWidth = 800, kHeight = 600, kMargin = 50;
  static std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
  }
  double x0_, x1_, y0_, y1_;
  std::ostringstream body_;
};

// ---------------------------------------------------------------- commands

void cmd_paps(const Globals& g, int order, int lvl, bool count_only) {
  require_format(g, {"text", "json", "csv"});
  if (order < 1) throw UsageError("order must be at least 1");
  if (lvl != 0 && (lvl < 1 || lvl > order)) throw UsageError("level must lie in 1..order");
  std::vector<Passport> list;
  std::uint64_t total = 0;
  if (count_only) {
    for (int m = 1; m <= order; ++m)
      if (lvl == 0 || m == lvl) total += count(order, m);
  } else {
    if (order > 10) throw UsageError("listing is limited to order 10; use --count");
    for (auto& p : enumerate(order))
      if (lvl == 0 || level(p) == lvl) list.push_back(p);
    total = list.size();
  }

  std::ostringstream os;
  if (g.format == "json") {
    json j{{"order", order}, {"level", lvl ? json(lvl) : json(nullptr)}, {"count", total}};
    if (!count_only) {
      j["paps"] = json::array();
      for (auto& p : list) j["paps"].push_back(passport_json(p));
    }
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    if (count_only) os << "order,level,count\n" << order << ',' << (lvl ? std::to_string(lvl) : "") << ',' << total << '\n';
    else {
      os << "index,level,passport\n";
      for (std::size_t i = 0; i < list.size(); ++i)
        os << i + 1 << ',' << level(list[i]) << ',' << csv_quote(format_passport(list[i])) << '\n';
    }
  } else if (count_only) {
    os << total << '\n';
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) os << std::setw(4) << i + 1 << "  " << format_passport(list[i]) << '\n';
  }
  emit(g, os.str());
}

void cmd_triangle(const Globals& g, int rows) {
  require_format(g, {"text", "json", "csv"});
  if (rows < 1) throw UsageError("rows must be at least 1");
  const auto tri = euler_bernoulli_triangle(rows);
  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"rows", tri}}.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "n";
    for (int m = 1; m <= rows; ++m) os << ",m" << m;
    os << '\n';
    for (std::size_t n = 0; n < tri.size(); ++n) {
      os << n + 1;
      for (std::size_t m = 0; m < static_cast<std::size_t>(rows); ++m)
        os << ',' << (m < tri[n].size() ? std::to_string(tri[n][m]) : "");
      os << '\n';
    }
  } else {
    for (const auto& row : tri) {
      for (std::size_t m = 0; m < row.size(); ++m) os << (m ? " " : "") << row[m];
      os << '\n';
    }
  }
  emit(g, os.str());
}

json outcome_json(const PassportOutcome& o) {
  if (auto* s = std::get_if<Snake>(&o)) return {{"kind", "snake"}, {"passport", passport_json(s->passport)}};
  if (auto* d = std::get_if<Degenerate>(&o)) return {{"kind", "degenerate"}, {"pattern", d->pattern}};
  const auto& n = std::get<NonMorse>(o);
  return {{"kind", "nonmorse"},
          {"reason", n.reason == Verdict::RepeatedCritical ? "repeated critical point" : "non-real critical point"},
          {"detail", n.detail}};
}

void cmd_passport(const Globals& g, const std::string& points, const std::string& coeffs) {
  require_format(g, {"text", "json", "csv"});
  if (points.empty() == coeffs.empty()) throw UsageError("give exactly one of --critical-points and --coeffs");
  const Rational tol = parse_q(g.prec, "--prec");
  if (tol <= 0) throw UsageError("--prec must be positive");
  Polynomial p;
  std::vector<Rational> xs;
  if (!points.empty()) {
    xs = parse_list(points, "critical point");
    try {
      validate(CriticalPointSpec{xs});
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    p = from_critical_points(CriticalPointSpec{xs});
  } else {
    auto cs = parse_list(coeffs, "coefficient");
    std::reverse(cs.begin(), cs.end());  // given highest degree first
    p = Polynomial(cs);
    if (p.degree() < 1) throw UsageError("polynomial must have degree at least 1");
  }
  const CriticalData cd = critical_data(p, tol);
  const PassportOutcome o = passport(p, tol);
  std::ostringstream os;
  if (g.format == "json") {
    json j = outcome_json(o);
    j["polynomial"] = to_string(p);
    j["critical_points"] = json::array();
    const Polynomial dp = derivative(p);
    for (const auto& r : cd.points) j["critical_points"].push_back(refine_root(dp, r, tol).approx());
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    const json j = outcome_json(o);
    os << "kind,value\n" << j["kind"].get<std::string>() << ',';
    if (auto* s = snake_passport(o)) os << csv_quote(format_passport(*s));
    else if (auto* d = std::get_if<Degenerate>(&o)) os << csv_quote(format_passport(d->pattern));
    else os << csv_quote(j["reason"].get<std::string>());
    os << '\n';
  } else {
    os << describe(o) << '\n';
  }
  emit(g, os.str());
}

void cmd_construct(const Globals& g, const std::string& text) {
  require_format(g, {"text", "json", "csv"});
  Passport target;
  try {
    target = parse_passport(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (auto why = pap_violation(target)) throw UsageError("not a proper alternating permutation: " + *why);
  ConstructOptions opts;
  opts.seed = g.seed;
  opts.tol = parse_q(g.prec, "--prec");
  const ConstructResult r = construct(target, opts);
  const Polynomial p = from_critical_points(r.spec);
  // Re-verified here, independently of construct's own check.
  const PassportOutcome check = passport(p, opts.tol);
  if (!(check == PassportOutcome(Snake{target})))
    throw std::runtime_error("verification failed: got " + describe(check));
  std::ostringstream os;
  if (g.format == "json") {
    json j{{"passport", passport_json(target)}, {"verified", true}, {"evaluations", r.evaluations},
           {"restarts", r.restarts}, {"polynomial", to_string(p)}};
    j["critical_points"] = json::array();
    for (const auto& x : r.spec.xs) j["critical_points"].push_back(to_string(x));
    j["coefficients"] = json::array();
    for (int i = p.degree(); i >= 0; --i) j["coefficients"].push_back(to_string(p.coefficient(i)));
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "index,critical_point\n";
    for (std::size_t i = 0; i < r.spec.xs.size(); ++i) os << i << ',' << to_string(r.spec.xs[i]) << '\n';
  } else {
    os << "passport " << format_passport(target) << " (verified)\n";
    os << "critical points";
    for (const auto& x : r.spec.xs) os << ' ' << to_string(x);
    os << "\np(x) = " << to_string(p) << '\n';
  }
  emit(g, os.str());
}

void cmd_classify5(const Globals& g, const std::string& bs, const std::string& cs) {
  require_format(g, {"text", "json", "csv"});
  const Param5 pt{parse_q(bs, "b"), parse_q(cs, "c")};
  const Stratum5 st = classify5(pt);
  static const char* kinds[] = {"region", "arc", "junction", "outside"};
  const char* kind = kinds[static_cast<int>(st.kind)];
  std::ostringstream os;
  if (g.format == "json") {
    json j{{"b", to_string(pt.b)}, {"c", to_string(pt.c)}, {"kind", kind}, {"stratum", st.name}};
    if (st.kind == Stratum5::Kind::Region) j["passport"] = passport_json(st.passport);
    if (st.kind == Stratum5::Kind::Arc) {
      j["degenerate_index"] = st.degenerate_index;
      j["pattern"] = st.pattern;
    }
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "b,c,kind,stratum,passport\n"
       << to_string(pt.b) << ',' << to_string(pt.c) << ',' << kind << ',' << st.name << ','
       << csv_quote(st.kind == Stratum5::Kind::Region ? format_passport(st.passport)
                                                      : st.kind == Stratum5::Kind::Arc ? format_passport(st.pattern) : "")
       << '\n';
  } else {
    os << kind << ' ' << st.name;
    if (st.kind == Stratum5::Kind::Region) os << " passport " << format_passport(st.passport);
    if (st.kind == Stratum5::Kind::Arc)
      os << " degenerate " << st.degenerate_index << " pattern " << format_passport(st.pattern);
    os << '\n';
  }
  emit(g, os.str());
}

void cmd_curves5(const Globals& g) {
  require_format(g, {"svg", "json", "text"});
  const auto lines = trace_curves5(g.resolution);
  const auto marks = landmarks5();
  std::ostringstream os;
  if (g.format == "svg") {
    Canvas cv(0, 3, 0, 1);
    cv.axes("b", "c");
    for (const auto& l : lines) cv.polyline(l, l.tag == "dq" ? "black" : l.tag == "g" ? "#c0392b" : "#2471a3", false);
    for (const auto& m : marks) cv.marker(m.b.get_d(), m.c.get_d(), m.name);
    for (const auto& [region, pt] : calibration_points5())
      cv.label(pt.b.get_d(), pt.c.get_d(), format_passport(region_passport(region)), -20, 4);
    os << cv.str();
  } else if (g.format == "json") {
    json j{{"landmarks", json::array()}, {"curves", json::array()}};
    for (const auto& m : marks) j["landmarks"].push_back({{"name", m.name}, {"b", m.b.get_d()}, {"c", m.c.get_d()}});
    for (const auto& l : lines) {
      json pts = json::array();
      for (auto [x, y] : l.points) pts.push_back({x, y});
      j["curves"].push_back({{"tag", l.tag}, {"points", pts}});
    }
    os << j.dump() << '\n';
  } else {
    for (const auto& m : marks) os << m.name << ' ' << std::setprecision(12) << m.b.get_d() << ' ' << m.c.get_d() << '\n';
    for (const auto& l : lines) os << "curve " << l.tag << ' ' << l.points.size() << " points\n";
  }
  emit(g, os.str());
}

void cmd_section6(const Globals& g, const std::string& cs) {
  require_format(g, {"text", "json", "csv", "svg"});
  const Rational gamma = parse_q(cs, "--c");
  if (gamma <= 0 || gamma > 1) throw UsageError("--c must lie in (0, 1]");
  if (g.resolution < 64) throw UsageError("--resolution must be at least 64");
  const SectionScan scan = scan_section(gamma, g.resolution);
  std::ostringstream os;
  auto outcome_text = [](const SectionComponent& c) {
    if (auto* p = snake_passport(c.outcome)) return format_passport(*p);
    return describe(c.outcome);
  };
  if (g.format == "json") {
    json j{{"gamma", to_string(gamma)}, {"resolution", g.resolution}, {"components", json::array()}};
    for (const auto& c : scan.components) {
      json item{{"id", c.id},
                {"rep", {{"a", to_string(c.representative.a)}, {"b", to_string(c.representative.b)},
                         {"c", to_string(c.representative.c)}}},
                {"number", c.label},
                {"cells", c.cells},
                {"consistent", c.consistent}};
      if (auto* p = snake_passport(c.outcome)) item["passport"] = passport_json(*p);
      else item["outcome"] = outcome_json(c.outcome);
      j["components"].push_back(item);
    }
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "id,a,b,c,number,passport,cells,consistent\n";
    for (const auto& c : scan.components)
      os << c.id << ',' << to_string(c.representative.a) << ',' << to_string(c.representative.b) << ','
         << to_string(c.representative.c) << ',' << c.label << ',' << csv_quote(outcome_text(c)) << ',' << c.cells
         << ',' << (c.consistent ? "true" : "false") << '\n';
  } else if (g.format == "svg") {
    const auto lines = section_curves(gamma, std::min(g.resolution, 256));
    double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
    for (const auto& l : lines)
      if (l.tag == "boundary")
        for (auto [x, y] : l.points) {
          x0 = std::min(x0, x);
          x1 = std::max(x1, x);
          y0 = std::min(y0, y);
          y1 = std::max(y1, y);
        }
    const double pad = 0.03 * std::max(x1 - x0, y1 - y0);
    Canvas cv(x0 - pad, x1 + pad, y0 - pad, y1 + pad);
    cv.axes("a", "b");
    for (const auto& l : lines) cv.polyline(l, l.tag == "z" ? "#2471a3" : "black", l.tag == "z");
    for (const auto& c : scan.components)
      cv.label(c.representative.a.get_d(), c.representative.b.get_d(), std::to_string(c.label), -4, 4);
    os << cv.str();
  } else {
    os << "gamma " << to_string(gamma) << ", resolution " << g.resolution << ", " << scan.components.size()
       << " components\n";
    for (const auto& c : scan.components)
      os << std::setw(3) << c.id << "  #" << std::setw(2) << std::left << c.label << std::right << "  "
         << std::setw(11) << outcome_text(c) << "  cells " << std::setw(6) << c.cells << "  rep (" << to_string(c.representative.a)
         << ", " << to_string(c.representative.b) << ")" << (c.consistent ? "" : "  INCONSISTENT") << '\n';
  }
  emit(g, os.str());
}

// Closed forms quoted for the section thresholds; a report names the ones
// lying within tol of an enclosure.
const std::vector<std::pair<std::string, Rational>>& known_thresholds() {
  static const std::vector<std::pair<std::string, Rational>> list{
      {"512/625", frac(512, 625)},         {"432/625", frac(432, 625)},   {"52488/78125", frac(52488, 78125)},
      {"52488/72125", frac(52488, 72125)}, {"1024/1875", frac(1024, 1875)}};
  return list;
}

std::vector<std::string> matching_fractions(const Threshold& t, const Rational& tol) {
  std::vector<std::string> out;
  for (const auto& [name, value] : known_thresholds())
    if (value >= t.gamma.lo - tol && value <= t.gamma.hi + tol) out.push_back(name);
  return out;
}

void cmd_bifurcations(const Globals& g, const std::string& lo_s, const std::string& hi_s, const std::string& tol_s,
                      const std::string& step_s) {
  require_format(g, {"text", "json", "csv"});
  const Rational lo = parse_q(lo_s, "--lo"), hi = parse_q(hi_s, "--hi"), tol = parse_q(tol_s, "--tol"),
                 step = parse_q(step_s, "--step");
  if (!(lo > 0 && lo < hi && hi <= 1)) throw UsageError("need 0 < lo < hi <= 1");
  if (tol <= 0 || step <= 0) throw UsageError("--tol and --step must be positive");
  const BifurcationReport r = detect_bifurcations(lo, hi, tol, g.resolution, step);
  std::ostringstream os;
  if (g.format == "json") {
    json j{{"lo", to_string(lo)},   {"hi", to_string(hi)},          {"tol", to_string(tol)},
           {"resolution", r.resolution}, {"scans", r.scans}, {"thresholds", json::array()},
           {"warnings", r.warnings}};
    for (const auto& t : r.thresholds)
      j["thresholds"].push_back({{"lo", to_string(t.gamma.lo)},
                                 {"hi", to_string(t.gamma.hi)},
                                 {"mid", t.gamma.mid().get_d()},
                                 {"count_above", t.count_above},
                                 {"count_below", t.count_below},
                                 {"labels_above", t.labels_above},
                                 {"labels_below", t.labels_below},
                                 {"description", t.description},
                                 {"coarse", t.coarse},
                                 {"matches", matching_fractions(t, tol)}});
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "lo,hi,mid,count_above,count_below,coarse,description\n";
    for (const auto& t : r.thresholds)
      os << to_string(t.gamma.lo) << ',' << to_string(t.gamma.hi) << ',' << std::setprecision(8)
         << t.gamma.mid().get_d() << ',' << t.count_above << ',' << t.count_below << ','
         << (t.coarse ? "true" : "false") << ',' << csv_quote(t.description) << '\n';
  } else {
    os << r.thresholds.size() << " signature changes in (" << lo.get_d() << ", " << hi.get_d() << "), resolution "
       << r.resolution << ", " << r.scans << " scans\n";
    for (const auto& t : r.thresholds) {
      os << "  gamma in [" << std::fixed << std::setprecision(6) << t.gamma.lo.get_d() << ", " << t.gamma.hi.get_d()
         << "]  " << std::defaultfloat << t.description;
      const auto m = matching_fractions(t, tol);
      for (const auto& name : m) os << "  ~ " << name;
      os << (t.coarse ? "  (coarse)" : "") << '\n';
    }
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  }
  emit(g, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Passports of real Morse polynomials: enumeration, realization and coefficient-space strata"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--prec", g.prec, "Refinement width for critical values")->capture_default_str();
  app.add_option("--resolution", g.resolution, "Grid resolution per axis")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for construct restarts")->capture_default_str();
  app.add_option("-o,--output", g.output, "Write the document to a file");

  int order = 0, lvl = 0, rows = 5;
  bool count_only = false;
  auto* paps = app.add_subcommand("paps", "List or count proper alternating permutations");
  paps->add_option("--order", order, "Order n")->required();
  paps->add_option("--level", lvl, "Restrict to first element m");
  paps->add_flag("--count", count_only, "Print the count only");

  auto* triangle = app.add_subcommand("triangle", "Rows of the Euler-Bernoulli triangle s(n,m)");
  triangle->add_option("--rows", rows, "Number of rows")->capture_default_str();

  std::string points, coeffs;
  auto* pass = app.add_subcommand("passport", "Passport of a polynomial");
  pass->add_option("--critical-points", points, "0 = x0 < x1 < ... (comma separated)");
  pass->add_option("--coeffs", coeffs, "Coefficients, highest degree first");

  std::string target;
  auto* cons = app.add_subcommand("construct", "Realize a passport by a Morse polynomial");
  cons->add_option("passport", target, "Target, e.g. 3,1,4,2")->required();

  std::string bs, cs;
  auto* c5 = app.add_subcommand("classify5", "Stratum of x^4+3x^3+bx^2+cx in the degree-5 partition");
  c5->add_option("--b", bs)->required();
  c5->add_option("--c", cs)->required();

  auto* curves = app.add_subcommand("curves5", "Curves dq = 0, g = 0, h = 0 with landmarks");

  std::string gs;
  auto* s6 = app.add_subcommand("section6", "Domains of the section c = gamma of the degree-6 partition");
  s6->add_option("--c", gs, "gamma in (0, 1]")->required();

  std::string lo = "0.5", hi = "1", tol = "1e-4", step = "0.01";
  auto* bif = app.add_subcommand("bifurcations", "Locate changes of the section topology in gamma");
  bif->add_option("--lo", lo)->capture_default_str();
  bif->add_option("--hi", hi)->capture_default_str();
  bif->add_option("--tol", tol)->capture_default_str();
  bif->add_option("--step", step, "Coarse sweep step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*paps) cmd_paps(g, order, lvl, count_only);
    else if (*triangle) cmd_triangle(g, rows);
    else if (*pass) cmd_passport(g, points, coeffs);
    else if (*cons) cmd_construct(g, target);
    else if (*c5) cmd_classify5(g, bs, cs);
    else if (*curves) cmd_curves5(g);
    else if (*s6) cmd_section6(g, gs);
    else if (*bif) cmd_bifurcations(g, lo, hi, tol, step);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
