// Command-line driver: parse JSON inputs, dispatch to the library, emit a
// deterministic report on standard output.
//
// Exit codes: 0 success / property holds; 1 input parsed but a property
// fails (invalid algebra, not a cocycle, not cohomologous, failed checks);
// 2 malformed input or I/O error; 3 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "equicat/json_io.hpp"

namespace {

using equicat::io::json;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapExceeded = 3;

struct Output {
  std::string format = "text";

  void emit(const json& doc) const {
    if (format == "json")
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << equicat::io::render_text(doc);
  }
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw equicat::ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw equicat::ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with equivariant cohomology and graded categorical groups"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--output", out.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string module_path, aux_path, aux2_path;
  std::string method = "snf";
  std::int64_t cap = 1'000'000;
  std::int64_t rep_cap = 4096;
  bool derive_unit = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a module or a factor set");
  validate->add_option("module", module_path, "module or category document")->required();
  validate->add_option("factorset", aux_path, "optional factor set to validate");
  validate->add_flag("--derive-unit", derive_unit,
                     "check the identity autoequivalence as a consequence, not a premise");

  CLI::App* h3 = app.add_subcommand("h3", "compute H^3 of the truncated complex");
  h3->add_option("module", module_path)->required();
  h3->add_option("--method", method)->check(CLI::IsMember({"snf", "enum"}));
  h3->add_option("--cap", cap, "candidate cap for enumeration");
  h3->add_option("--rep-cap", rep_cap, "attach representatives when the order is at most this");

  CLI::App* ccheck = app.add_subcommand("cocycle-check", "test the degree-3 cocycle conditions");
  ccheck->add_option("module", module_path)->required();
  ccheck->add_option("cochain", aux_path)->required();

  CLI::App* fbuild = app.add_subcommand("factorset-build", "factor set of a cocycle");
  fbuild->add_option("category", module_path, "category document (module plus xi)")->required();
  fbuild->add_option("cochain", aux_path)->required();

  CLI::App* finduce =
      app.add_subcommand("factorset-induce", "cocycle of an enough-strict factor set");
  finduce->add_option("category", module_path)->required();
  finduce->add_option("factorset", aux_path)->required();

  CLI::App* fstrict =
      app.add_subcommand("factorset-strictify", "replace a factor set by an enough-strict one");
  fstrict->add_option("category", module_path)->required();
  fstrict->add_option("factorset", aux_path)->required();

  CLI::App* cohom = app.add_subcommand("cohomologous", "decide cohomologousness of factor sets");
  cohom->add_option("category", module_path)->required();
  cohom->add_option("factorset1", aux_path)->required();
  cohom->add_option("factorset2", aux2_path)->required();

  CLI::App* cverify = app.add_subcommand("crossed-verify", "verify the crossed product axioms");
  cverify->add_option("category", module_path)->required();
  cverify->add_option("factorset", aux_path)->required();

  CLI::App* classify = app.add_subcommand("classify", "verify the classification bijection");
  classify->add_option("category", module_path)->required();
  classify->add_option("--cap", cap, "candidate cap for enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return kOk;
    }
    std::cout << "usage error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (validate->parsed()) {
      if (aux_path.empty()) {
        equicat::EmPtr em = equicat::io::module_from_json(load_json(module_path));
        json doc{{"valid", true},
                 {"pi_order", em->pi.order()},
                 {"gamma_order", em->gamma.order()},
                 {"a_order", em->a.order()}};
        out.emit(doc);
        return kOk;
      }
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::FactorSet fs = equicat::io::factor_set_from_json(base, load_json(aux_path));
      equicat::FactorSetReport rep = equicat::validate_factor_set(fs, !derive_unit);
      out.emit(equicat::io::factor_set_report_to_json(rep));
      return rep.all_pass() ? kOk : kPropertyFailed;
    }

    if (h3->parsed()) {
      equicat::EmPtr em = equicat::io::module_from_json(load_json(module_path));
      equicat::H3Options opts;
      opts.cap = cap;
      opts.rep_cap = rep_cap;
      equicat::H3Result r = equicat::compute_h3(
          em, method == "snf" ? equicat::H3Method::snf : equicat::H3Method::enumeration, opts);
      out.emit(equicat::io::h3_result_to_json(r));
      return kOk;
    }

    if (ccheck->parsed()) {
      equicat::EmPtr em = equicat::io::module_from_json(load_json(module_path));
      equicat::Cochain3 h = equicat::io::cochain3_from_json(em, load_json(aux_path));
      equicat::Report rep = equicat::is_cocycle3(h);
      out.emit(equicat::io::report_to_json(rep));
      return rep.all_pass() ? kOk : kPropertyFailed;
    }

    if (fbuild->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::Cochain3 h = equicat::io::cochain3_from_json(base.em, load_json(aux_path));
      equicat::FactorSet fs = equicat::factor_set_from_cocycle(base, base.em, h);
      out.emit(equicat::io::factor_set_to_json(fs));
      return kOk;
    }

    if (finduce->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::FactorSet fs = equicat::io::factor_set_from_json(base, load_json(aux_path));
      equicat::Cochain3 h = equicat::induce_cocycle(fs);
      out.emit(equicat::io::cochain3_to_json(h));
      return kOk;
    }

    if (fstrict->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::FactorSet fs = equicat::io::factor_set_from_json(base, load_json(aux_path));
      auto [strict, witness] = equicat::strictify(fs);
      json doc{{"factor_set", equicat::io::factor_set_to_json(strict)},
               {"witness", equicat::io::witness_to_json(*base.em, witness)}};
      out.emit(doc);
      return kOk;
    }

    if (cohom->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::FactorSet fs1 = equicat::io::factor_set_from_json(base, load_json(aux_path));
      equicat::FactorSet fs2 = equicat::io::factor_set_from_json(base, load_json(aux2_path));
      auto w = equicat::are_cohomologous_factor_sets(fs1, fs2);
      json doc{{"cohomologous", w.has_value()},
               {"witness", w ? equicat::io::witness_to_json(*base.em, *w) : json()}};
      out.emit(doc);
      return w.has_value() ? kOk : kPropertyFailed;
    }

    if (cverify->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::FactorSet fs = equicat::io::factor_set_from_json(base, load_json(aux_path));
      equicat::CrossedProduct d = equicat::build_crossed_product(fs);
      equicat::Report rep = equicat::verify_crossed_product(d);
      out.emit(equicat::io::report_to_json(rep));
      return rep.all_pass() ? kOk : kPropertyFailed;
    }

    if (classify->parsed()) {
      equicat::GrCategory base = equicat::io::grcat_from_json(load_json(module_path));
      equicat::ClassificationReport rep = equicat::verify_omega(base.em, base, cap);
      out.emit(equicat::io::classification_to_json(rep));
      return rep.bijection_verified ? kOk : kPropertyFailed;
    }
  } catch (const equicat::CapExceededError& e) {
    out.emit(equicat::io::error_to_json(e));
    return kCapExceeded;
  } catch (const equicat::ParseError& e) {
    out.emit(equicat::io::error_to_json(e));
    return kBadInput;
  } catch (const equicat::Error& e) {
    out.emit(equicat::io::error_to_json(e));
    return kPropertyFailed;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
