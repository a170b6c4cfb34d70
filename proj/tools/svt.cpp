// svt: expand the deformed coproduct/antipode and twist elements of the
// super-Virasoro algebra, and run the exact verification suites.
//
// Exit codes: 0 success, 1 identity violation found, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svt/format.hpp"
#include "svt/verify.hpp"

namespace {

using namespace svt;

struct ExpandOptions {
  std::vector<std::string> selector;
  long m = 1;
  int order = 3;
  std::string format = "text";
  std::string alpha;
  bool unsafe_order = false;
};

struct CheckOptions {
  std::string suite;
  std::vector<long> m_values;
  std::optional<int> order;
  std::optional<long> i_min, i_max, k2_min, k2_max;
  std::string format = "text";
  bool unsafe_order = false;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

TextStyle style_of(const std::string& format) {
  return format == "latex" ? TextStyle::Latex : TextStyle::Plain;
}

template <class SeriesT>
void print_series(const SeriesT& s, const ExpandOptions& opt) {
  SeriesT shown = s;
  if (!opt.alpha.empty())
    shown = specialize_alpha(s, rational_from_string(opt.alpha));
  if (opt.format == "json")
    std::cout << to_json(shown).dump(2) << "\n";
  else
    std::cout << to_text(shown, style_of(opt.format)) << "\n";
}

int run_expand(const ExpandOptions& opt) {
  if (opt.m == 0) return usage_error("m must be nonzero");
  if (!opt.unsafe_order && (opt.order < 0 || opt.order > 5))
    return usage_error("order must lie in [0, 5]; pass --unsafe-order to lift");
  if (opt.order < 0) return usage_error("order must be nonnegative");

  const auto& sel = opt.selector;
  try {
    const TwistContext ctx(opt.m, opt.order);
    if (sel.size() == 2 &&
        (sel[0] == "delta-L" || sel[0] == "delta-G" || sel[0] == "antipode-L" ||
         sel[0] == "antipode-G")) {
      const long idx = std::stol(sel[1]);
      const bool is_l = sel[0].back() == 'L';
      // G indices arrive doubled on the command line
      const Generator g = is_l ? gen_L(idx) : gen_G2(idx);
      if (sel[0].rfind("delta", 0) == 0)
        print_series(delta_closed(g, ctx), opt);
      else
        print_series(antipode_closed(g, ctx), opt);
      return 0;
    }
    if (sel.size() == 3 && sel[0] == "twist") {
      const Rational a = rational_from_string(sel[2]);
      if (sel[1] == "F")
        print_series(twist_F(a, ctx), opt);
      else if (sel[1] == "Fcal")
        print_series(twist_Fcal(a, ctx), opt);
      else if (sel[1] == "u")
        print_series(twist_u(a, ctx), opt);
      else if (sel[1] == "v")
        print_series(twist_v(a, ctx), opt);
      else
        return usage_error("twist element must be F, Fcal, u or v");
      return 0;
    }
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument&) {
    return usage_error("malformed index");
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  return usage_error(
      "selector must be: delta-L i | delta-G 2k | antipode-L i | "
      "antipode-G 2k | twist F|Fcal|u|v a");
}

void print_report_text(const Report& rep) {
  std::cout << "suite " << rep.suite_id << ": " << rep.cases_run << " cases, "
            << rep.failures.size() << " failures ("
            << static_cast<long>(rep.wall_ms) << " ms)\n";
  for (const Failure& f : rep.failures) {
    std::cout << "  FAIL " << f.params << "\n";
    std::cout << "    left:  " << f.left << "\n";
    std::cout << "    right: " << f.right << "\n";
  }
}

int run_check(const CheckOptions& opt) {
  SuiteSpec spec;
  spec.suite_id = opt.suite;
  spec.m_values = opt.m_values;
  for (long m : spec.m_values)
    if (m == 0) return usage_error("m must be nonzero");
  spec.order = opt.order;
  spec.i_min = opt.i_min;
  spec.i_max = opt.i_max;
  spec.k2_min = opt.k2_min;
  spec.k2_max = opt.k2_max;
  if (opt.unsafe_order) spec.max_order = 64;
  try {
    const Report rep = run_suite(spec);
    if (opt.format == "json")
      std::cout << to_json(rep).dump(2) << "\n";
    else
      print_report_text(rep);
    return rep.passed() ? 0 : 1;
  } catch (const UnknownSuite& e) {
    return usage_error(e.what());
  } catch (const OrderTooLarge& e) {
    return usage_error(e.what());
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twist deformation of the super-Virasoro algebra"};
  app.require_subcommand(1);

  ExpandOptions eo;
  CLI::App* expand = app.add_subcommand(
      "expand", "print a deformed coproduct/antipode or a twist element");
  expand
      ->add_option("selector", eo.selector,
                   "delta-L i | delta-G 2k | antipode-L i | antipode-G 2k | "
                   "twist F|Fcal|u|v a  (G indices are passed doubled)")
      ->expected(2, 3);
  expand->add_option("--m", eo.m, "nonzero integer m");
  expand->add_option("--order", eo.order, "truncation order N (default 3)");
  expand->add_option("--format", eo.format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  expand->add_option("--alpha", eo.alpha,
                     "optional rational P/Q substituted for alpha");
  expand->add_flag("--unsafe-order", eo.unsafe_order,
                   "allow truncation orders above 5");

  CheckOptions co;
  CLI::App* check =
      app.add_subcommand("check", "run a verification suite (see list-suites)");
  check->add_option("suite", co.suite, "suite id")->required();
  check->add_option("--m", co.m_values, "m values (repeatable)");
  check->add_option("--order", co.order, "truncation order override");
  check->add_option("--i-min", co.i_min, "smallest L index");
  check->add_option("--i-max", co.i_max, "largest L index");
  check->add_option("--k2-min", co.k2_min, "smallest doubled G index");
  check->add_option("--k2-max", co.k2_max, "largest doubled G index");
  check->add_option("--format", co.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--unsafe-order", co.unsafe_order,
                  "allow truncation orders above 5");

  CLI::App* list = app.add_subcommand("list-suites", "list suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (expand->parsed()) return run_expand(eo);
  if (check->parsed()) return run_check(co);
  if (list->parsed()) {
    for (const auto& [id, desc] : svt::list_suites())
      std::cout << id << "\t" << desc << "\n";
    return 0;
  }
  return 2;
}
