#pragma once

// Command-line front end. Exit codes: 0 success or In, 1 NotIn, 2
// inconclusive, 64 usage error, 65 math error (a JSON error object is printed).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xsect/bounds.hpp"
#include "xsect/groebner.hpp"
#include "xsect/io.hpp"
#include "xsect/membership.hpp"
#include "xsect/reconstruct.hpp"

namespace xsect::cli {

inline constexpr int kIn = 0;
inline constexpr int kNotIn = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kMath = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool plain = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t cap = Limits{}.max_matrix_entries;

  std::string ideal_path, slices_path, poly, points, field = "QQ", which, mode = "sectional", variant = "corrected",
                                                    engine = "groebner", order = "grlex", matrix, at;
  std::size_t count = 0;
  std::uint64_t d = 0, delta = 0, r = 0, n = 0, degV = 0, N = 0, M = 0;
  std::optional<std::uint64_t> bound;
  unsigned degree = 0;
};

namespace detail {

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, path + ": " + e.what());
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

template <Field K>
std::vector<typename K::Element> sample_points(const K& field, const Options& o) {
  std::vector<typename K::Element> pts;
  if (!o.points.empty()) {
    for (const auto& s : split(o.points, ',')) pts.push_back(field.parse(s));
  } else if (o.count > 0) {
    std::mt19937_64 rng(o.seed);
    pts = distinct_points(field, o.count, rng);
  } else {
    throw UsageError("give --points or --count");
  }
  require_distinct<K>(pts, ErrorKind::DuplicatePoints);
  return pts;
}

inline Limits limits_of(const Options& o) {
  Limits l;
  l.max_matrix_entries = o.cap;
  l.jobs = std::max(1u, o.jobs);
  return l;
}

template <Field K>
Json certificate_json(const MembershipCertificate<K>& c) {
  Json j;
  j["degree_bound"] = c.degree_bound_used;
  j["cofactors"] = xsect::detail::strings_of(c.cofactors);
  return j;
}

struct Printer {
  std::ostream& out;
  bool plain;

  void emit(const Json& j, const std::string& text) const { out << (plain ? text : j.dump()) << '\n'; }
};

template <Field K>
int member(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  auto f = parse_poly(o.poly, I.nvars(), field);
  auto res = o.bound ? bounded_membership(f, I, *o.bound, limits_of(o)) : ideal_membership(f, I, limits_of(o));
  Json j;
  j["verdict"] = to_string(res.verdict);
  std::string text = to_string(res.verdict);
  if (res.certificate) {
    j["certificate"] = certificate_json(*res.certificate);
    for (const auto& c : res.certificate->cofactors) text += "\n" + to_string(c);
  }
  pr.emit(j, text);
  switch (res.verdict) {
    case Verdict::In: return kIn;
    case Verdict::NotIn: return kNotIn;
    default: return kInconclusive;
  }
}

inline RadicalEngine engine_of(const Options& o) {
  if (o.engine == "groebner") return RadicalEngine::Groebner;
  if (o.engine == "kollar") return RadicalEngine::KollarBounded;
  throw UsageError("--engine must be groebner or kollar");
}

template <Field K>
int radical_member(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  auto f = parse_poly(o.poly, I.nvars(), field);
  auto v = radical_membership(f, I, engine_of(o), limits_of(o));
  Json j;
  j["verdict"] = to_string(v);
  pr.emit(j, to_string(v));
  return v == RadicalVerdict::InRadical ? kIn : kNotIn;
}

template <Field K, class V>
Json sliced_json(const SlicedVerdict<K, V>& s) {
  Json j;
  j["verdict"] = to_string(s.verdict);
  j["required"] = s.required.get_str();
  j["samples"] = s.samples;
  j["passed"] = s.passed;
  if (s.failed_at) j["failed_at"] = s.failed_at->to_string();
  return j;
}

template <Field K>
int member_sliced(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  auto f = parse_poly(o.poly, I.nvars(), field);
  auto pts = sample_points(field, o);
  auto s = finite_slice_membership<K>(f, I, pts, limits_of(o));
  pr.emit(sliced_json(s), to_string(s.verdict));
  switch (s.verdict) {
    case Verdict::In: return kIn;
    case Verdict::NotIn: return kNotIn;
    default: return kInconclusive;
  }
}

template <Field K>
int radical_member_sliced(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  auto f = parse_poly(o.poly, I.nvars(), field);
  auto pts = sample_points(field, o);
  auto s = finite_slice_radical_membership<K>(f, I, pts, o.degV, engine_of(o), limits_of(o));
  pr.emit(sliced_json(s), to_string(s.verdict));
  switch (s.verdict) {
    case RadicalVerdict::InRadical: return kIn;
    case RadicalVerdict::NotInRadical: return kNotIn;
    default: return kInconclusive;
  }
}

template <Field K>
int slice(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  auto rec = slice_ideal(I, field.parse(o.at));
  Json j = ideal_to_json(field, I.nvars() - 1, rec.gens);
  std::string text;
  for (const auto& g : rec.gens) text += (text.empty() ? "" : "\n") + to_string(g);
  pr.emit(j, text);
  return kIn;
}

template <Field K>
int dataset(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  SliceMode mode;
  if (o.mode == "sectional") {
    mode = SliceMode::SectionalGenerators;
  } else if (o.mode == "full") {
    mode = SliceMode::FullSlices;
  } else {
    throw UsageError("--mode must be full or sectional");
  }
  auto pts = sample_points(field, o);
  auto ds = build_dataset<K>(I, pts, mode);
  Json j = dataset_to_json(ds);
  pr.emit(j, j.dump(2));
  return kIn;
}

template <Field K>
int reconstruct(const K& field, const Options& o, const Printer& pr) {
  auto ds = dataset_from_json(field, read_json(o.slices_path));
  auto f = reconstruct_principal(SectionalData<K>::from_dataset(ds, o.degree), limits_of(o));
  Json j;
  j["field"] = field.spec().to_string();
  j["nvars"] = ds.nvars;
  j["gens"] = Json::array({to_string(f)});
  pr.emit(j, to_string(f));
  return kIn;
}

template <Field K>
int recover_gens(const K& field, const Options& o, const Printer& pr) {
  auto ds = dataset_from_json(field, read_json(o.slices_path));
  auto basis = recover_generators_from_slices(ds, o.degree, limits_of(o));
  Json j;
  j["field"] = field.spec().to_string();
  j["nvars"] = ds.nvars;
  j["gens"] = xsect::detail::strings_of(basis);
  std::string text;
  for (const auto& g : basis) text += (text.empty() ? "" : "\n") + to_string(g);
  pr.emit(j, text);
  return kIn;
}

template <Field K>
int sharpness(const K& field, const Options& o, const Printer& pr) {
  Example1Variant v;
  if (o.variant == "corrected") {
    v = Example1Variant::Corrected;
  } else if (o.variant == "printed") {
    v = Example1Variant::AsPrinted;
  } else {
    throw UsageError("--variant must be corrected or printed");
  }
  auto pair = example1_pair(o.degree, field, v);
  auto rep = verify_sharpness(o.degree, field, v);
  Json j;
  j["d"] = rep.d;
  j["field"] = field.spec().to_string();
  j["variant"] = o.variant;
  j["f"] = to_string(pair.f);
  j["g"] = to_string(pair.g);
  Json pts = Json::array();
  for (const auto& a : pair.points) pts.push_back(a.to_string());
  j["points"] = pts;
  j["generator_degree"] = rep.generator_degree;
  j["points_agreeing"] = rep.points_agreeing;
  j["slices_equal_at_all_points"] = rep.slices_equal_at_all_points;
  j["ideals_distinct"] = rep.ideals_distinct;
  std::string text = "f = " + to_string(pair.f) + "\ng = " + to_string(pair.g) +
                     "\nslices_equal_at_all_points = " + (rep.slices_equal_at_all_points ? "true" : "false") +
                     "\nideals_distinct = " + (rep.ideals_distinct ? "true" : "false");
  pr.emit(j, text);
  return kIn;
}

inline MonomialOrder order_of(const Options& o) {
  if (o.order == "grlex") return MonomialOrder::grlex();
  if (o.order.rfind("elim:", 0) == 0) {
    try {
      return MonomialOrder::elimination(std::stoul(o.order.substr(5)));
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("--order must be grlex or elim:<k>");
}

template <Field K>
int groebner(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  Limits lim = limits_of(o);
  auto gb = buchberger(I, order_of(o), lim);
  Json j = ideal_to_json(field, I.nvars(), gb.basis);
  std::string text;
  for (const auto& g : gb.basis) text += (text.empty() ? "" : "\n") + to_string(g);
  pr.emit(j, text);
  return kIn;
}

template <Field K>
int linchange(const K& field, const Options& o, const Printer& pr) {
  Ideal<K> I = ideal_from_json(field, read_json(o.ideal_path));
  std::vector<std::vector<typename K::Element>> rows;
  for (const auto& row : split(o.matrix, ';')) {
    std::vector<typename K::Element> r;
    for (const auto& e : split(row, ',')) r.push_back(field.parse(e));
    if (r.size() != I.nvars()) throw UsageError("matrix rows need " + std::to_string(I.nvars()) + " entries");
    rows.push_back(std::move(r));
  }
  if (rows.size() != I.nvars()) throw UsageError("matrix needs " + std::to_string(I.nvars()) + " rows");
  auto M = Matrix<K>::from_rows(field, rows);
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(apply_linear_change(g, M));
  Json j = ideal_to_json(field, I.nvars(), gens);
  std::string text;
  for (const auto& g : gens) text += (text.empty() ? "" : "\n") + to_string(g);
  pr.emit(j, text);
  return kIn;
}

inline int bounds(const Options& o, const Printer& pr) {
  BoundReport b;
  if (o.which == "hermann") {
    b = hermann_bound(o.d, o.delta, o.r, o.n);
  } else if (o.which == "kollar") {
    b = kollar_bound(o.delta, o.n);
  } else if (o.which == "geometric") {
    b = slice_count_geometric(o.d, o.degV);
  } else if (o.which == "algebraic") {
    b = slice_count_algebraic(o.d, o.delta, o.r, o.n);
  } else if (o.which == "simplified") {
    b = simplified_generator_bound(o.delta, o.n);
  } else if (o.which == "alglin") {
    b = alg_lin_samples(o.d, o.N, o.M);
  } else {
    throw UsageError("--which must be hermann, kollar, geometric, algebraic, simplified or alglin");
  }
  Json j;
  j["bound"] = to_string(b.name);
  Json params;
  for (const auto& [k, v] : b.params) params[k] = v;
  j["params"] = params;
  j["value"] = b.value.get_str();
  pr.emit(j, b.value.get_str());
  return kIn;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact ideal membership and reconstruction from hyperplane slices", "xsect"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", o.plain, "plain text output instead of JSON");
  app.add_option("--jobs", o.jobs, "worker threads for per-slice work")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for random sample points");
  app.add_option("--cap", o.cap, "largest linear system (matrix entries) attempted");

  auto ideal_opt = [&](CLI::App* s) { s->add_option("--ideal", o.ideal_path, "ideal JSON file")->required(); };
  auto poly_opt = [&](CLI::App* s) { s->add_option("--poly", o.poly, "polynomial")->required(); };
  auto point_opts = [&](CLI::App* s) {
    auto* p = s->add_option("--points", o.points, "comma-separated sample points");
    auto* c = s->add_option("--count", o.count, "number of random sample points (see --seed)");
    p->excludes(c);
  };

  auto* member = app.add_subcommand("member", "decide f in I with cofactor certificate");
  ideal_opt(member);
  poly_opt(member);
  member->add_option("--bound", o.bound, "search cofactors up to this degree only");

  auto* radical = app.add_subcommand("radical-member", "decide f in rad(I)");
  ideal_opt(radical);
  poly_opt(radical);
  radical->add_option("--engine", o.engine, "groebner or kollar");

  auto* msliced = app.add_subcommand("member-sliced", "test f in I through slices x1 = a");
  ideal_opt(msliced);
  poly_opt(msliced);
  point_opts(msliced);

  auto* rsliced = app.add_subcommand("radical-member-sliced", "test f in rad(I) through slices x1 = a");
  ideal_opt(rsliced);
  poly_opt(rsliced);
  point_opts(rsliced);
  rsliced->add_option("--degV", o.degV, "degree of the variety of I")->required();
  rsliced->add_option("--engine", o.engine, "groebner or kollar");

  auto* slice = app.add_subcommand("slice", "restrict an ideal to x1 = a");
  ideal_opt(slice);
  slice->add_option("--at", o.at, "the point a")->required();

  auto* dataset = app.add_subcommand("dataset", "slice an ideal at many points");
  ideal_opt(dataset);
  point_opts(dataset);
  dataset->add_option("--mode", o.mode, "full or sectional");

  auto* recon = app.add_subcommand("reconstruct", "rebuild a principal ideal from sectional generators");
  recon->add_option("--slices", o.slices_path, "slice dataset JSON")->required();
  recon->add_option("--degree", o.degree, "degree cap d")->required();

  auto* recover = app.add_subcommand("recover-gens", "basis of the degree-<=d polynomials with every slice in I");
  recover->add_option("--slices", o.slices_path, "slice dataset JSON")->required();
  recover->add_option("--degree", o.degree, "degree cap d")->required();

  auto* bounds = app.add_subcommand("bounds", "evaluate a degree or sample-count bound");
  bounds->add_option("--which", o.which, "hermann, kollar, geometric, algebraic, simplified or alglin")->required();
  bounds->add_option("--d", o.d);
  bounds->add_option("--delta", o.delta);
  bounds->add_option("--r", o.r);
  bounds->add_option("--n", o.n);
  bounds->add_option("--degV", o.degV);
  bounds->add_option("--N", o.N);
  bounds->add_option("--M", o.M);

  auto* sharp = app.add_subcommand("sharpness", "two principal ideals agreeing on 2d - 1 slices");
  sharp->add_option("--degree", o.degree, "d")->required();
  sharp->add_option("--field", o.field, "fp:<p> with p = 1 mod 2d - 1")->required();
  sharp->add_option("--variant", o.variant, "corrected or printed");

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis");
  ideal_opt(gb);
  gb->add_option("--order", o.order, "grlex or elim:<k>");

  auto* lin = app.add_subcommand("linchange", "substitute x_i -> sum_j M_ij x_j");
  ideal_opt(lin);
  lin->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n" << "run with --help for the command list\n";
    return kUsage;
  }

  const detail::Printer pr{out, o.plain};
  try {
    if (bounds->parsed()) return detail::bounds(o, pr);
    std::string field_text;
    if (sharp->parsed()) {
      field_text = o.field;
    } else {
      const std::string& path = (recon->parsed() || recover->parsed()) ? o.slices_path : o.ideal_path;
      field_text = xsect::detail::get_string(detail::read_json(path), "field");
    }
    return with_field(FieldSpec::parse(field_text), [&](const auto& field) -> int {
      if (member->parsed()) return detail::member(field, o, pr);
      if (radical->parsed()) return detail::radical_member(field, o, pr);
      if (msliced->parsed()) return detail::member_sliced(field, o, pr);
      if (rsliced->parsed()) return detail::radical_member_sliced(field, o, pr);
      if (slice->parsed()) return detail::slice(field, o, pr);
      if (dataset->parsed()) return detail::dataset(field, o, pr);
      if (recon->parsed()) return detail::reconstruct(field, o, pr);
      if (recover->parsed()) return detail::recover_gens(field, o, pr);
      if (sharp->parsed()) return detail::sharpness(field, o, pr);
      if (gb->parsed()) return detail::groebner(field, o, pr);
      if (lin->parsed()) return detail::linchange(field, o, pr);
      throw UsageError("no subcommand");
    });
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    Json j;
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* fe = dynamic_cast<const FeasibilityError*>(&e)) j["error"]["bound"] = fe->bound();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["error"]["position"] = pe->position();
    if (o.plain) {
      err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    } else {
      out << j.dump() << '\n';
    }
    return kMath;
  }
}

}  // namespace xsect::cli
