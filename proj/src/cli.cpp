#include "coxkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

namespace coxkit {

using njson = nlohmann::ordered_json;

namespace {

// Problems with flags and input text; reported on exit code 2, while
// exceptions from the computations themselves are reported on exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

RootVector parse_root_literal(const SystemPtr& sys, const std::string& text) {
  const auto& field = sys->field();
  RootVector acc = RootVector::zero(sys);
  Cursor c{text};
  bool any = false;
  while (!c.done()) {
    int sign = 1;
    while (c.peek() == '+' || c.peek() == '-') {
      if (text[c.pos] == '-') sign = -sign;
      ++c.pos;
    }
    if (c.done()) throw std::invalid_argument("root literal ends after a sign");

    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::size_t start = c.pos;
      while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) ++c.pos;
      std::string num = text.substr(start, c.pos - start);
      std::string den = "1";
      if (c.peek() == '/') {
        ++c.pos;
        c.skip();
        std::size_t dstart = c.pos;
        while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos])))
          ++c.pos;
        if (c.pos == dstart)
          throw std::invalid_argument("missing denominator in root literal");
        den = text.substr(dstart, c.pos - dstart);
      }
      coeff = Rational(mpz_class(num), mpz_class(den));
      if (coeff.get_den() == 0) throw std::invalid_argument("zero denominator in root literal");
      coeff.canonicalize();
      if (c.peek() == '*') ++c.pos;
    }

    FieldElem factor = field->one();
    std::string name = c.ident();
    if ((name == "r2" || name == "r3") && sys->index_of(name) < 0) {
      try {
        factor = field->two_cos_pi_over(name == "r2" ? 4 : 6);
      } catch (const std::domain_error&) {
        throw std::invalid_argument("'" + name + "' is not available in this system's field");
      }
      if (c.peek() == '*') ++c.pos;
      name = c.ident();
    }
    if (name.empty()) throw std::invalid_argument("expected a generator name in root literal");
    int s = sys->index_of(name);
    if (s < 0) throw std::invalid_argument("unknown generator '" + name + "' in root literal");

    FieldElem coefficient = factor * field->rational(coeff) * field->rational(Rational(sign));
    acc = acc + RootVector::simple(sys, s).scaled(coefficient);
    any = true;
    if (!c.done() && c.peek() != '+' && c.peek() != '-')
      throw std::invalid_argument(std::string("unexpected character '") + c.peek() +
                                  "' in root literal");
  }
  if (!any) throw std::invalid_argument("empty root literal");
  // A root names a reflection, so the negative of a root is accepted and
  // canonicalized; anything that is not a unit root is rejected here.
  switch (classify_root(acc)) {
    case RootSign::positive:
      return acc;
    case RootSign::negative:
      return -acc;
    case RootSign::not_a_unit_root:
      throw std::invalid_argument("'" + text + "' is not a root of this system");
  }
  return acc;
}

std::vector<RootVector> parse_root_list(const SystemPtr& sys, const std::string& text) {
  std::vector<RootVector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_root_literal(sys, text.substr(start, end - start)));
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

Element parse_element_literal(const SystemPtr& sys, const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "e" && sys->index_of("e") < 0))
    return Element::identity(sys);
  std::vector<int> word;
  for (const std::string& t : tokens) {
    int s = sys->index_of(t);
    if (s < 0) throw std::invalid_argument("unknown generator '" + t + "' in element literal");
    word.push_back(s);
  }
  return Element::from_word(sys, word);
}

std::vector<int> parse_generator_subset(const SystemPtr& sys, const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int s = sys->index_of(cur);
    if (s < 0) throw std::invalid_argument("unknown generator '" + cur + "' in subset");
    out.push_back(s);
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string brace_names(const SystemPtr& sys, const std::vector<int>& I) {
  std::string out = "{";
  for (std::size_t k = 0; k < I.size(); ++k)
    out += (k ? ", " : "") + sys->name(I[k]);
  return out + "}";
}

njson names_json(const SystemPtr& sys, const std::vector<int>& I) {
  njson arr = njson::array();
  for (int s : I) arr.push_back(sys->name(s));
  return arr;
}

njson roots_json(const std::vector<RootVector>& roots) {
  njson arr = njson::array();
  for (const RootVector& r : roots) arr.push_back(r.str());
  return arr;
}

unsigned parse_label_value(const std::string& raw) {
  std::string v = raw;
  if (v.rfind("m=", 0) == 0) v = v.substr(2);
  if (v == "oo" || v == "inf") return infinite_label;
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad label parameter '" + raw + "' (expected a number or oo)");
  unsigned long parsed = std::stoul(v);
  if (parsed < 2) throw UsageError("label parameter must be at least 2");
  return static_cast<unsigned>(parsed);
}

int checked_int(const std::string& text) {
  std::string v = text;
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad integer '" + text + "'");
  return std::stoi(v);
}

std::vector<int> parse_ranks(const std::string& text) {
  std::vector<int> out;
  std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    int a = checked_int(text.substr(0, dots));
    int b = checked_int(text.substr(dots + 2));
    if (a < 1 || b < a) throw UsageError("bad rank range '" + text + "'");
    for (int r = a; r <= b; ++r) out.push_back(r);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(checked_int(text.substr(start, end - start)));
    start = end + 1;
    if (end == text.size()) break;
  }
  if (out.empty()) throw UsageError("empty rank list");
  return out;
}

struct InputFlags {
  std::string inline_dsl;
  std::string file;
  std::string family;
  std::string param = "4";
  int rank = 0;
};

SystemPtr resolve_system(const InputFlags& in, njson& input_json) {
  int sources = !in.inline_dsl.empty() + !in.file.empty() + !in.family.empty();
  if (sources != 1)
    throw UsageError("exactly one of --inline, --file, --family must be given");
  if (!in.inline_dsl.empty()) {
    input_json = njson{{"source", "inline"}, {"text", in.inline_dsl}};
    return parse_system(in.inline_dsl);
  }
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot read file '" + in.file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    input_json = njson{{"source", "file"}, {"path", in.file}};
    return parse_system(buf.str());
  }
  auto kind = family_from_name(in.family);
  if (!kind) throw UsageError("unknown family '" + in.family + "'");
  if (in.rank < 1) throw UsageError("--rank is required with --family");
  FamilyDescriptor fam{*kind, *kind == FamilyKind::ex45 ? parse_label_value(in.param) : 0};
  input_json = njson{{"source", "family"}, {"family", in.family}, {"rank", in.rank}};
  if (*kind == FamilyKind::ex45) input_json["m"] = label_str(fam.m);
  try {
    return truncate(fam, in.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations in Coxeter groups"};
  app.name("coxkit");
  app.require_subcommand(1);

  InputFlags in;
  bool json_mode = false;
  bool with_timings = false;
  std::string roots_flag, elements_flag, element_flag, subset_flag;
  std::string left_w, left_i, right_w, right_i;
  std::string scenario, ranks_flag = "2..12", property_flag = "locally_finite";
  int depth = 0, search_bound = 1000, max_i = 5;
  std::size_t max_roots = 10000, max_elements = 200000;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--inline", in.inline_dsl, "system described inline (nodes/edge lines)");
      sub->add_option("--file", in.file, "file holding a system description");
      sub->add_option("--family", in.family, "family name: a1inf a2inf binf dinf ex33 ex45");
      sub->add_option("--rank", in.rank, "truncation rank when --family is used");
      sub->add_option("--param", in.param, "family label parameter, e.g. m=4 or m=oo");
    }
    sub->add_flag("--json", json_mode, "machine-readable report");
    sub->add_flag("--timings", with_timings, "include elapsed time in the report");
  };

  CLI::App* classify = app.add_subcommand("classify", "recognize the finite type of a system");
  add_common(classify, true);

  CLI::App* roots_cmd = app.add_subcommand("roots", "enumerate positive roots");
  add_common(roots_cmd, true);
  roots_cmd->add_option("--depth", depth, "depth bound (0 = none)");
  roots_cmd->add_option("--max", max_roots, "maximum number of roots");

  CLI::App* pi_cmd = app.add_subcommand("pi", "canonical generators of a reflection subgroup");
  add_common(pi_cmd, true);
  pi_cmd->add_option("--roots", roots_flag, "';'-separated generating roots")->required();

  CLI::App* closure_cmd =
      app.add_subcommand("closure", "parabolic closure through the finite support subgroup");
  add_common(closure_cmd, true);
  closure_cmd->add_option("--elements", elements_flag, "';'-separated element words")->required();
  closure_cmd->add_option("--max", max_elements, "enumeration budget");

  CLI::App* ispar_cmd = app.add_subcommand("is-parabolic", "test whether a reflection subgroup is parabolic");
  add_common(ispar_cmd, true);
  ispar_cmd->add_option("--roots", roots_flag, "';'-separated generating roots")->required();
  ispar_cmd->add_option("--search-bound", search_bound, "bounded-search step budget");

  CLI::App* intersect_cmd = app.add_subcommand("intersect", "intersect two parabolic subgroups");
  add_common(intersect_cmd, true);
  intersect_cmd->add_option("--left-w", left_w, "left conjugator word (default identity)");
  intersect_cmd->add_option("--left-i", left_i, "left generator subset")->required();
  intersect_cmd->add_option("--right-w", right_w, "right conjugator word (default identity)");
  intersect_cmd->add_option("--right-i", right_i, "right generator subset")->required();
  intersect_cmd->add_option("--max", max_elements, "enumeration budget");

  CLI::App* coset_cmd = app.add_subcommand("coset-min", "minimal coset representative w^I and w_I");
  add_common(coset_cmd, true);
  coset_cmd->add_option("--element", element_flag, "element word")->required();
  coset_cmd->add_option("--subset", subset_flag, "generator subset")->required();

  CLI::App* odd_cmd = app.add_subcommand("odd-components", "components of the odd graph");
  add_common(odd_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a scripted scenario");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--scenario", scenario, "ex33, ex45, or g2")->required();
  verify_cmd->add_option("--max-i", max_i, "depth of the scenario sweep (1..5)");
  verify_cmd->add_option("--param", in.param, "scenario label parameter, e.g. m=4 or m=oo");

  CLI::App* families_cmd = app.add_subcommand("families", "stabilization report over a truncation tower");
  add_common(families_cmd, false);
  families_cmd->add_option("--family", in.family, "family name")->required();
  families_cmd->add_option("--param", in.param, "family label parameter");
  families_cmd->add_option("--ranks", ranks_flag, "tower ranks, e.g. 2..12 or 2,4,8");
  families_cmd->add_option("--property", property_flag,
                           "union_subgroup, union_reflection, locally_finite, locally_parabolic");

  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      app.exit(e, out, err);
      return 0;
    } catch (const CLI::CallForAllHelp& e) {
      app.exit(e, out, err);
      return 0;
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return 2;
    }
  }

  njson doc;
  auto start_time = std::chrono::steady_clock::now();
  auto emit = [&](const std::string& text) -> void {
    doc["timings"] = njson::object();
    if (with_timings)
      doc["timings"]["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(
                                         std::chrono::steady_clock::now() - start_time)
                                         .count();
    if (json_mode)
      out << doc.dump(2) << "\n";
    else
      out << text;
  };
  auto run = [&](auto&& fn) -> int {
    try {
      return fn();
    } catch (const std::exception& e) {
      err << "computation failed: " << e.what() << "\n";
      return 1;
    }
  };

  try {
    if (classify->parsed()) {
      doc["verb"] = "classify";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson::object();
      return run([&]() {
        TypeInfo info = finite_type_recognize(sys);
        njson comps = njson::array();
        for (const ComponentType& c : info.components)
          comps.push_back(njson{{"members", names_json(sys, c.members)},
                                {"label", c.label},
                                {"finite", c.finite},
                                {"order", c.finite ? njson(c.order) : njson(nullptr)}});
        doc["result"] = njson{{"type", info.str()},
                              {"finite", info.finite},
                              {"order", info.finite ? njson(info.order) : njson(nullptr)},
                              {"components", comps}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        text << info.str() << (info.finite ? ", finite, order " + std::to_string(info.order)
                                           : ", infinite")
             << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (roots_cmd->parsed()) {
      doc["verb"] = "roots";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"depth", depth}, {"max", max_roots}};
      return run([&]() {
        RootEnumeration phi = enumerate_positive_roots(sys, depth, max_roots);
        // Reading order refines the depth-level enumeration order.
        std::vector<std::size_t> order(phi.roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
          return root_display_less(phi.roots[x], phi.roots[y]);
        });
        RootEnumeration sorted;
        sorted.saturated = phi.saturated;
        for (std::size_t i : order) {
          sorted.roots.push_back(phi.roots[i]);
          sorted.depths.push_back(phi.depths[i]);
        }
        phi = std::move(sorted);
        njson arr = njson::array();
        for (std::size_t i = 0; i < phi.roots.size(); ++i)
          arr.push_back(njson{{"root", phi.roots[i].str()}, {"depth", phi.depths[i]}});
        doc["result"] = njson{
            {"count", phi.roots.size()}, {"complete", phi.saturated}, {"roots", arr}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        for (std::size_t i = 0; i < phi.roots.size(); ++i)
          text << phi.roots[i].str() << "  (depth " << phi.depths[i] << ")\n";
        text << phi.roots.size() << " roots, "
             << (phi.saturated ? "complete" : "truncated by the bounds") << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (pi_cmd->parsed()) {
      doc["verb"] = "pi";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"roots", roots_flag}};
      std::vector<RootVector> gens = parse_root_list(sys, roots_flag);
      return run([&]() {
        std::vector<RootVector> pi = canonical_generators(sys, gens);
        std::sort(pi.begin(), pi.end(), root_display_less);
        doc["result"] = njson{{"rank", pi.size()}, {"canonical_roots", roots_json(pi)}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        for (std::size_t i = 0; i < pi.size(); ++i) text << (i ? ", " : "") << pi[i].str();
        text << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (closure_cmd->parsed()) {
      doc["verb"] = "closure";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"elements", elements_flag}, {"max", max_elements}};
      std::vector<Element> X;
      std::size_t start = 0;
      while (start <= elements_flag.size()) {
        std::size_t end = elements_flag.find(';', start);
        if (end == std::string::npos) end = elements_flag.size();
        X.push_back(parse_element_literal(sys, elements_flag.substr(start, end - start)));
        start = end + 1;
        if (end == elements_flag.size()) break;
      }
      return run([&]() {
        LpClosureResult r = lp_closure(sys, X, max_elements);
        bool computed = r.status == LpClosureResult::Status::computed;
        doc["result"] = njson{{"status", computed ? "computed" : "support_infinite"},
                              {"support", names_json(sys, r.support)},
                              {"note", r.note}};
        if (computed) {
          doc["result"]["w"] = r.descriptor->w.word_str();
          doc["result"]["I"] = names_json(sys, r.descriptor->I);
          doc["result"]["canonical_roots"] = roots_json(parabolic_canonical_roots(*r.descriptor));
        }
        doc["certificates"] = njson::object();
        std::ostringstream text;
        if (computed)
          text << "closure = (" << r.descriptor->w.word_str() << ", "
               << brace_names(sys, r.descriptor->I) << ")\n";
        else
          text << "support subgroup is not finite: " << r.note << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (ispar_cmd->parsed()) {
      doc["verb"] = "is-parabolic";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"roots", roots_flag}, {"search_bound", search_bound}};
      std::vector<RootVector> gens = parse_root_list(sys, roots_flag);
      return run([&]() {
        ReflectionSubgroup G(sys, gens);
        IsParabolicResult r = is_parabolic(G, search_bound);
        doc["result"] = njson{{"verdict", membership_str(r.verdict)},
                              {"I", r.verdict == Membership::yes ? names_json(sys, r.I)
                                                                 : njson(nullptr)},
                              {"reason", r.reason}};
        doc["certificates"] = njson::object();
        if (r.verdict == Membership::yes)
          doc["certificates"]["conjugator"] = r.conjugator->word_str();
        std::ostringstream text;
        if (r.verdict == Membership::yes)
          text << "yes: G = c W_I c^-1 with c = " << r.conjugator->word_str() << ", I = "
               << brace_names(sys, r.I) << "\n";
        else
          text << membership_str(r.verdict) << ": " << r.reason << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (intersect_cmd->parsed()) {
      doc["verb"] = "intersect";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"left_w", left_w},
                            {"left_i", left_i},
                            {"right_w", right_w},
                            {"right_i", right_i},
                            {"max", max_elements}};
      ParabolicDescriptor a =
          make_descriptor(parse_element_literal(sys, left_w), parse_generator_subset(sys, left_i));
      ParabolicDescriptor b = make_descriptor(parse_element_literal(sys, right_w),
                                              parse_generator_subset(sys, right_i));
      return run([&]() {
        ParabolicDescriptor meet = intersect_parabolics_finite(sys, a, b, max_elements);
        doc["result"] = njson{{"w", meet.w.word_str()},
                              {"I", names_json(sys, meet.I)},
                              {"rank", meet.I.size()}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        text << "(" << meet.w.word_str() << ", " << brace_names(sys, meet.I) << "), rank "
             << meet.I.size() << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (coset_cmd->parsed()) {
      doc["verb"] = "coset-min";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson{{"element", element_flag}, {"subset", subset_flag}};
      Element w = parse_element_literal(sys, element_flag);
      std::vector<int> I = parse_generator_subset(sys, subset_flag);
      return run([&]() {
        auto [rep, inner] = coset_min(w, I);
        doc["result"] = njson{{"coset_min", rep.word_str()}, {"subgroup_part", inner.word_str()}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        text << "w^I = " << rep.word_str() << "\n"
             << "w_I = " << inner.word_str() << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (odd_cmd->parsed()) {
      doc["verb"] = "odd-components";
      SystemPtr sys = resolve_system(in, doc["input"]);
      doc["params"] = njson::object();
      return run([&]() {
        std::vector<std::vector<int>> comps = sys->odd_components();
        njson arr = njson::array();
        for (const std::vector<int>& c : comps) arr.push_back(names_json(sys, c));
        doc["result"] = njson{{"components", arr}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        for (const std::vector<int>& c : comps) text << brace_names(sys, c) << "\n";
        emit(text.str());
        return 0;
      });
    }

    if (verify_cmd->parsed()) {
      doc["verb"] = "verify";
      doc["input"] = njson{{"source", "scenario"}, {"scenario", scenario}};
      if (scenario != "ex33" && scenario != "ex45" && scenario != "g2")
        throw UsageError("unknown scenario '" + scenario + "' (ex33, ex45, g2)");
      if (max_i < 1 || max_i > 5) throw UsageError("--max-i must be between 1 and 5");
      unsigned m = 4;
      if (scenario == "ex45") {
        m = parse_label_value(in.param);
        if (m != infinite_label && (m < 4 || m % 2 != 0))
          throw UsageError("ex45 label must be oo or an even number at least 4");
      }
      doc["params"] = njson{{"max_i", max_i}};
      if (scenario == "ex45") doc["params"]["m"] = label_str(m);
      return run([&]() {
        ScenarioResult r = scenario == "ex33"   ? verify_scenario_ex33(max_i)
                           : scenario == "ex45" ? verify_scenario_ex45(m, max_i)
                                                : verify_scenario_g2();
        njson asserts = njson::array();
        for (const Assertion& a : r.assertions)
          asserts.push_back(njson{{"description", a.description},
                                  {"expected", a.expected},
                                  {"computed", a.computed},
                                  {"pass", a.pass}});
        doc["result"] = njson{{"name", r.name},
                              {"passed", r.passed()},
                              {"ranks_used", r.ranks_used},
                              {"assertions", asserts}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        std::size_t ok = 0;
        for (const Assertion& a : r.assertions) {
          text << (a.pass ? "[PASS] " : "[FAIL] ") << a.description << "\n";
          if (!a.pass)
            text << "    expected: " << a.expected << "\n    computed: " << a.computed << "\n";
          ok += a.pass;
        }
        text << ok << " of " << r.assertions.size() << " assertions passed\n";
        emit(text.str());
        return r.passed() ? 0 : 1;
      });
    }

    if (families_cmd->parsed()) {
      doc["verb"] = "families";
      auto kind = family_from_name(in.family);
      if (!kind) throw UsageError("unknown family '" + in.family + "'");
      FamilyDescriptor fam{*kind, *kind == FamilyKind::ex45 ? parse_label_value(in.param) : 0};
      std::vector<int> ranks = parse_ranks(ranks_flag);
      auto prop = tower_property_from_name(property_flag);
      if (!prop) throw UsageError("unknown tower property '" + property_flag + "'");
      doc["input"] = njson{{"source", "family"}, {"family", in.family}, {"ranks", ranks}};
      if (*kind == FamilyKind::ex45) doc["input"]["m"] = label_str(fam.m);
      doc["params"] = njson{{"property", tower_property_name(*prop)}};
      TruncationTower tower;
      try {
        tower = make_tower(fam, ranks);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return run([&]() {
        TowerReport rep = tower_check(tower, *prop);
        njson outcomes = njson::array();
        for (const TowerOutcome& o : rep.outcomes)
          outcomes.push_back(njson{{"rank", o.rank}, {"value", o.value}});
        doc["result"] = njson{
            {"window", rep.window}, {"outcomes", outcomes}, {"stable", rep.stable}};
        doc["certificates"] = njson::object();
        std::ostringstream text;
        text << "window:";
        for (const std::string& n : rep.window) text << " " << n;
        text << "\n";
        for (const TowerOutcome& o : rep.outcomes)
          text << "rank " << o.rank << ": " << o.value << "\n";
        text << "stable: " << (rep.stable ? "yes" : "no") << "\n";
        emit(text.str());
        return 0;
      });
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line << ", column " << e.col << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace coxkit
