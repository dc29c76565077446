#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "demdesc/braid.hpp"
#include "demdesc/char_io.hpp"
#include "demdesc/demazure.hpp"
#include "demdesc/descent.hpp"
#include "demdesc/relation_suite.hpp"
#include "demdesc/root_datum.hpp"
#include "demdesc/weyl.hpp"

namespace {

using demdesc::Character;
using demdesc::RootDatumPtr;
using nlohmann::json;

json weight_json(const demdesc::Weight& w, int rank) {
  json arr = json::array();
  for (int i = 0; i < rank; ++i) arr.push_back(w[i]);
  return arr;
}

// Loads a character file and checks it against the --type argument.
Character load_character(const std::string& path, const RootDatumPtr& rd) {
  const Character f = demdesc::character_from_json(demdesc::read_file(path));
  demdesc::require_same_datum(*f.datum(), *rd);
  return f;
}

int cmd_info(const std::string& type) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  json out;
  out["type"] = rd->tag();
  out["rank"] = rd->rank();
  json cartan = json::array();
  for (int i = 1; i <= rd->rank(); ++i) {
    json row = json::array();
    for (int j = 1; j <= rd->rank(); ++j) row.push_back(rd->cartan(i, j));
    cartan.push_back(std::move(row));
  }
  out["cartan"] = std::move(cartan);
  out["positive_roots"] = rd->positive_roots().size();
  out["weyl_order"] = demdesc::enumerate_weyl(rd).size();
  out["longest_length"] = demdesc::longest_element(rd).length();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_bruhat(const std::string& type, const std::string& w_text, const std::string& v_text) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  const demdesc::WeylElement w = demdesc::from_word(rd, demdesc::word_from_string(w_text));
  const demdesc::WeylElement v = demdesc::from_word(rd, demdesc::word_from_string(v_text));
  std::cout << (demdesc::bruhat_leq(v, w) ? "true" : "false") << "\n";
  return 0;
}

int cmd_demazure_apply(const std::string& type, const std::string& word_text,
                       const std::string& in_path, const std::string& out_path) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  const demdesc::Word word = demdesc::word_from_string(word_text);
  const Character f = load_character(in_path, rd);
  const Character g = demdesc::demazure_word(word, f);
  demdesc::write_file(out_path, demdesc::character_to_json(g));
  return 0;
}

int cmd_descent_check(const std::string& type, const std::string& in_path) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  const Character f = load_character(in_path, rd);
  const demdesc::TheoremEquivalences eq = demdesc::theorem_equivalences(f);
  json out;
  out["descent"] = eq.descent;
  out["full"] = eq.full;
  out["invariant"] = eq.invariant;
  if (!eq.descent) {
    for (int i = 1; i <= rd->rank(); ++i) {
      const Character defect = demdesc::counit_defect(f, i);
      if (!defect.is_zero()) {
        out["failing_index"] = i;
        out["defect"] = json::parse(demdesc::character_to_json(defect));
        break;
      }
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const std::string& type, const std::string& in_path,
                  const std::string& out_path) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  const Character f = load_character(in_path, rd);
  const demdesc::GDecomposition d = demdesc::decompose(f);
  const std::string text = demdesc::decomposition_to_json(d);
  demdesc::write_file(out_path, text);
  std::cout << text;
  return 0;
}

int cmd_braid_nf(const std::string& type, const std::string& word_text) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  const demdesc::BraidElement b =
      demdesc::braid_from_word(rd, demdesc::word_from_string(word_text));
  std::cout << demdesc::braid_to_string(b) << "\n";
  return 0;
}

int cmd_verify(const std::string& type, std::uint64_t seed, int samples) {
  const RootDatumPtr rd = demdesc::RootDatum::from_tag(type);
  demdesc::VerifyOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  std::cout << "verify " << rd->tag() << " seed=" << seed << " samples=" << samples << "\n";
  bool all_pass = true;
  for (const demdesc::SuiteResult& r : demdesc::run_relation_suite(rd, opts)) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all statements hold" : "FAILURES detected") << "\n";
  return all_pass ? 0 : 1;
}

void emit_error(const std::string& code, const std::string& detail, const json& extra = {}) {
  json err;
  err["error"] = code;
  err["detail"] = detail;
  if (extra.is_object()) {
    for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
  }
  std::cerr << err.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("DEMAZURE_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (end != cap && *end == '\0' && value > 0) {
      demdesc::set_enum_cap(static_cast<std::size_t>(value));
    }
  }

  CLI::App app{"exact Demazure-operator engine on weight-lattice characters"};
  app.require_subcommand(1);

  std::string type;
  std::string w_text = "e", v_text = "e", word_text = "e";
  std::string in_path, out_path;
  std::uint64_t seed = 0;
  int samples = 200;

  CLI::App* info = app.add_subcommand("info", "type data: Cartan matrix, root and group sizes");
  info->add_option("--type", type, "type tag, e.g. A2")->required();

  CLI::App* bruhat = app.add_subcommand("bruhat", "test v <= w in Bruhat order");
  bruhat->add_option("--type", type)->required();
  bruhat->add_option("--w", w_text, "word for w, e.g. 1,2,1")->required();
  bruhat->add_option("--v", v_text, "word for v")->required();

  CLI::App* demazure = app.add_subcommand("demazure", "Demazure operators on character files");
  demazure->require_subcommand(1);
  CLI::App* dem_apply = demazure->add_subcommand("apply", "apply D_{i_1} ... D_{i_n}");
  dem_apply->add_option("--type", type)->required();
  dem_apply->add_option("--word", word_text, "generator word, rightmost applies first")
      ->required();
  dem_apply->add_option("--in", in_path, "input character file")->required();
  dem_apply->add_option("--out", out_path, "output character file")->required();

  CLI::App* descent = app.add_subcommand("descent", "descent-category membership");
  descent->require_subcommand(1);
  CLI::App* descent_check = descent->add_subcommand("check", "report the three equivalences");
  descent_check->add_option("--type", type)->required();
  descent_check->add_option("--in", in_path, "input character file")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "decompose into highest weights");
  decompose->add_option("--type", type)->required();
  decompose->add_option("--in", in_path, "input character file")->required();
  decompose->add_option("--out", out_path, "output decomposition file")->required();

  CLI::App* braid = app.add_subcommand("braid", "positive braid monoid");
  braid->require_subcommand(1);
  CLI::App* braid_nf = braid->add_subcommand("nf", "left-greedy normal form of a word");
  braid_nf->add_option("--type", type)->required();
  braid_nf->add_option("--word", word_text, "generator word")->required();

  CLI::App* verify = app.add_subcommand("verify", "randomized relation suite");
  verify->add_option("--type", type)->required();
  verify->add_option("--seed", seed, "PRNG seed (default 0)");
  verify->add_option("--samples", samples, "samples per statement (default 200)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(type);
    if (bruhat->parsed()) return cmd_bruhat(type, w_text, v_text);
    if (demazure->parsed() && dem_apply->parsed())
      return cmd_demazure_apply(type, word_text, in_path, out_path);
    if (descent->parsed() && descent_check->parsed()) return cmd_descent_check(type, in_path);
    if (decompose->parsed()) return cmd_decompose(type, in_path, out_path);
    if (braid->parsed() && braid_nf->parsed()) return cmd_braid_nf(type, word_text);
    if (verify->parsed()) return cmd_verify(type, seed, samples);
    std::cerr << "missing subcommand; see --help\n";
    return 2;
  } catch (const demdesc::NotInDescentCategory& e) {
    json extra;
    extra["failing_index"] = e.failing_index();
    extra["defect"] = json::parse(demdesc::character_to_json(e.defect()));
    emit_error(e.code(), e.what(), extra);
    return 1;
  } catch (const demdesc::Error& e) {
    emit_error(e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("Internal", e.what());
    return 1;
  }
}
