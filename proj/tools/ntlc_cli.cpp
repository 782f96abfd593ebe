// Command-line front end: normalization, multiplication, central-element
// tools, weight calculus, heap drawings, matrix export, finite modules,
// enumeration, and the verification suite.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed verification.

#include <CLI11.hpp>

#include "ntlc/serialize.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using namespace ntlc;

json read_json_source(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  return json::parse(in);
}

Word word_arg(const CoxeterData& d, const std::string& word_flag,
              const std::string& from_json) {
  if (!from_json.empty()) {
    Word w = word_from_json(read_json_source(from_json));
    check_word(d, w);
    return w;
  }
  return word_from_string(d, word_flag);
}

TElement element_arg(const CoxeterData& d, const std::string& word_flag,
                     const std::string& from_json) {
  if (!from_json.empty())
    return element_from_json(d, read_json_source(from_json));
  return t_word(d, word_from_string(d, word_flag));
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

struct CommonOpts {
  int n = 2;
  std::string word;
  std::string from_json;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_word = true) {
  cmd->add_option("--n", o.n, "rank (number of generators minus one)")
      ->check(CLI::Range(2, 64));
  if (with_word)
    cmd->add_option("--word", o.word, "comma-separated letters, e.g. 2,1,0");
  cmd->add_option("--from-json", o.from_json,
                  "read the input payload from a JSON file ('-' for stdin)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the nil Temperley-Lieb algebra of affine type C"};
  app.require_subcommand(1);

  // normalize
  CommonOpts norm;
  auto* cmd_norm = app.add_subcommand("normalize", "canonical form of a word");
  add_common(cmd_norm, norm);

  // minuscule
  CommonOpts minu;
  auto* cmd_minu = app.add_subcommand("minuscule", "test the interval property");
  add_common(cmd_minu, minu);

  // mul
  CommonOpts mulo;
  std::string mul_a, mul_b, mul_c;
  auto* cmd_mul = app.add_subcommand("mul", "multiply basis words or elements");
  add_common(cmd_mul, mulo, /*with_word=*/false);
  cmd_mul->add_option("--a", mul_a, "first factor word");
  cmd_mul->add_option("--b", mul_b, "second factor word");
  cmd_mul->add_option("--c", mul_c, "optional third factor word");

  // q-element
  CommonOpts qopt;
  auto* cmd_q = app.add_subcommand("q-element", "the central element Q");
  add_common(cmd_q, qopt, /*with_word=*/false);

  // cform
  CommonOpts cfo;
  auto* cmd_cform = app.add_subcommand("cform", "factor a full-support word into weight pair and grade");
  add_common(cmd_cform, cfo);

  // valuation
  CommonOpts valo;
  auto* cmd_val = app.add_subcommand("valuation", "largest power of Q dividing an element");
  add_common(cmd_val, valo);

  // coxeter
  CommonOpts coxo;
  std::string cox_weight;
  auto* cmd_cox = app.add_subcommand("coxeter", "canonical word of a sign string");
  add_common(cmd_cox, coxo, /*with_word=*/false);
  cmd_cox->add_option("--weight", cox_weight, "sign string over +- of length n")
      ->required();

  // construct-c
  CommonOpts cco;
  std::string cc_lambda, cc_mu;
  long long cc_r = 1;
  auto* cmd_cc = app.add_subcommand("construct-c", "full-support word from upper/lower weights and grade");
  add_common(cmd_cc, cco, /*with_word=*/false);
  cmd_cc->add_option("--lambda", cc_lambda, "upper weight")->required();
  cmd_cc->add_option("--mu", cc_mu, "lower weight")->required();
  cmd_cc->add_option("--r", cc_r, "number of letters equal to 0")->required();

  // weights
  CommonOpts wto;
  auto* cmd_wts = app.add_subcommand("weights", "lower and upper weights of a full-support word");
  add_common(cmd_wts, wto);

  // heap
  CommonOpts heapo;
  std::string heap_format = "dot";
  bool heap_dot = false, heap_tikz = false;
  auto* cmd_heap = app.add_subcommand("heap", "draw the embedded heap of a word");
  add_common(cmd_heap, heapo);
  cmd_heap->add_option("--format", heap_format, "dot | tikz | json")
      ->check(CLI::IsMember({"dot", "tikz", "json"}));
  cmd_heap->add_flag("--dot", heap_dot, "shorthand for --format dot");
  cmd_heap->add_flag("--tikz", heap_tikz, "shorthand for --format tikz");

  // matrix
  CommonOpts mato;
  std::string mat_element, mat_format = "json";
  auto* cmd_mat = app.add_subcommand("matrix", "matrix of an element in the weight basis");
  add_common(cmd_mat, mato);
  cmd_mat->add_option("--element", mat_element, "named element (Q)");
  cmd_mat->add_option("--format", mat_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // module
  CommonOpts modo;
  std::string mod_c = "1";
  int mod_m = 1;
  bool mod_trivial = false;
  auto* cmd_mod = app.add_subcommand("module", "finite module with nonzero central scalar");
  add_common(cmd_mod, modo, /*with_word=*/false);
  cmd_mod->add_option("--c", mod_c, "central scalar (nonzero rational)");
  cmd_mod->add_option("--m", mod_m, "nilpotency order (positive)");
  cmd_mod->add_flag("--trivial", mod_trivial, "emit the one-dimensional module instead");

  // enumerate
  CommonOpts eno;
  int en_max_len = -1;
  bool en_words = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "count canonical basis words by length");
  add_common(cmd_enum, eno, /*with_word=*/false);
  cmd_enum->add_option("--max-len", en_max_len, "largest length (default 12 for n=2, 10 for n=3, else 8)");
  cmd_enum->add_flag("--words", en_words, "include the words in the report");

  // verify
  CommonOpts vo;
  std::string v_level = "standard", v_format = "json", v_fault;
  std::uint64_t v_seed = 20250823;
  auto* cmd_verify = app.add_subcommand("verify", "run the named-check suite");
  add_common(cmd_verify, vo, /*with_word=*/false);
  cmd_verify->add_option("--level", v_level, "quick | standard | full")
      ->check(CLI::IsMember({"quick", "standard", "full"}));
  cmd_verify->add_option("--seed", v_seed, "seed for the randomized checks");
  cmd_verify->add_option("--format", v_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_verify->add_option("--inject-fault", v_fault,
                         "deliberately corrupt a rule to prove the suite can fail (arrow)")
      ->check(CLI::IsMember({"arrow", "arrow_flip"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_norm->parsed()) {
      CoxeterData d(norm.n);
      Word w = word_arg(d, norm.word, norm.from_json);
      emit(json{{"word", word_to_json(cf_normal_form(d, w))}});
    } else if (cmd_minu->parsed()) {
      CoxeterData d(minu.n);
      Word w = word_arg(d, minu.word, minu.from_json);
      emit(json{{"word", word_to_json(w)}, {"minuscule", is_minuscule(d, w)}});
    } else if (cmd_mul->parsed()) {
      CoxeterData d(mulo.n);
      TElement acc = t_one(d);
      if (!mulo.from_json.empty()) {
        json doc = read_json_source(mulo.from_json);
        if (doc.is_object() && doc.contains("factors")) {
          for (const auto& f : doc.at("factors"))
            acc = mul(d, acc, element_from_json(d, f));
        } else {
          acc = mul(d, acc, element_from_json(d, doc));
        }
      } else {
        if (cmd_mul->count("--a") == 0 || cmd_mul->count("--b") == 0) {
          std::cerr << "mul requires --a and --b (or --from-json)\n";
          return 2;
        }
        acc = mul(d, acc, t_word(d, word_from_string(d, mul_a)));
        acc = mul(d, acc, t_word(d, word_from_string(d, mul_b)));
        if (cmd_mul->count("--c"))
          acc = mul(d, acc, t_word(d, word_from_string(d, mul_c)));
      }
      emit(element_to_json(acc));
    } else if (cmd_q->parsed()) {
      CoxeterData d(qopt.n);
      emit(element_to_json(q_element(d)));
    } else if (cmd_cform->parsed()) {
      CoxeterData d(cfo.n);
      Word w = word_arg(d, cfo.word, cfo.from_json);
      auto f = factor_c_form(d, w);
      if (!f) throw domain_error("word does not have full support");
      emit(json{{"lambda", f->lambda}, {"mu", f->mu}, {"r", f->r}});
    } else if (cmd_val->parsed()) {
      CoxeterData d(valo.n);
      TElement a = element_arg(d, valo.word, valo.from_json);
      emit(json{{"valuation", q_valuation(d, a)}});
    } else if (cmd_cox->parsed()) {
      CoxeterData d(coxo.n);
      check_weight(d, cox_weight);
      emit(json{{"word", word_to_json(coxeter_word(d, cox_weight))}});
    } else if (cmd_cc->parsed()) {
      CoxeterData d(cco.n);
      check_weight(d, cc_lambda);
      check_weight(d, cc_mu);
      auto w = construct_C(d, cc_lambda, cc_mu, cc_r);
      if (!w) {
        emit(json{{"exists", false}});
        std::cerr << "no full-support minuscule element for these parameters\n";
        return 1;
      }
      emit(json{{"word", word_to_json(*w)}});
    } else if (cmd_wts->parsed()) {
      CoxeterData d(wto.n);
      Word w = word_arg(d, wto.word, wto.from_json);
      auto [lo, hi] = weights_of(d, w);
      emit(json{{"lower", lo}, {"upper", hi}});
    } else if (cmd_heap->parsed()) {
      CoxeterData d(heapo.n);
      Word w = word_arg(d, heapo.word, heapo.from_json);
      std::string fmt = heap_format;
      if (heap_dot) fmt = "dot";
      if (heap_tikz) fmt = "tikz";
      if (fmt == "dot") std::cout << heap_to_dot(d, w);
      else if (fmt == "tikz") std::cout << heap_to_tikz(d, w);
      else emit(heap_to_json(d, w));
    } else if (cmd_mat->parsed()) {
      CoxeterData d(mato.n);
      TElement a = t_zero(d);
      if (!mat_element.empty()) {
        if (mat_element != "Q" && mat_element != "q")
          throw domain_error("unknown named element: " + mat_element);
        a = q_element(d);
      } else if (!mato.from_json.empty()) {
        json doc = read_json_source(mato.from_json);
        if (doc.is_object() && doc.contains("entries")) {
          // A matrix document round-trips directly.
          WeightMatrix m = matrix_from_json(doc);
          if (mat_format == "csv") std::cout << matrix_to_csv(m);
          else emit(matrix_to_json(m));
          return 0;
        }
        a = element_from_json(d, doc);
      } else if (cmd_mat->count("--word")) {
        a = t_word(d, word_from_string(d, mato.word));
      } else {
        std::cerr << "matrix requires --element, --word, or --from-json\n";
        return 2;
      }
      WeightMatrix m = matrix_of(d, a);
      if (mat_format == "csv") std::cout << matrix_to_csv(m);
      else emit(matrix_to_json(m));
    } else if (cmd_mod->parsed()) {
      CoxeterData d(modo.n);
      FiniteModule mod = mod_trivial
                             ? trivial_module(d)
                             : build_module(d, rational_from_string(mod_c), mod_m);
      emit(module_to_json(mod));
    } else if (cmd_enum->parsed()) {
      CoxeterData d(eno.n);
      int max_len = en_max_len;
      if (max_len < 0) max_len = eno.n == 2 ? 12 : (eno.n == 3 ? 10 : 8);
      emit(enumeration_to_json(enumerate_minuscule(d, max_len, en_words)));
    } else if (cmd_verify->parsed()) {
      Fault fault = v_fault.empty() ? Fault::none : Fault::arrow_flip;
      VerifyReport rep =
          verify_suite(vo.n, level_from_string(v_level), v_seed, fault);
      if (v_format == "text") {
        for (const CheckResult& c : rep.checks)
          std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
                    << c.seconds << " s)\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES present")
                  << "\n";
      } else {
        std::cout << verify_to_json(rep).dump(2) << "\n";
      }
      return rep.all_pass() ? 0 : 3;
    }
    return 0;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
