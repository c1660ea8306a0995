// cpalg: exact commuting probabilities of connected linear algebraic groups.
//
// Subcommands: pg, construct, table, verify, classes, limit.
// Exit codes: 0 success, 1 failed verification or internal inconsistency,
// 2 usage or parse errors (including tables beyond --max-order).

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpalg/constructor.hpp"
#include "cpalg/finite/growth.hpp"
#include "cpalg/finite/group_table.hpp"
#include "cpalg/finite/prime_field.hpp"
#include "cpalg/finite/report.hpp"
#include "cpalg/parser.hpp"

using namespace cpalg;
using cpalg::finite::Counter;
using cpalg::finite::Family;
using cpalg::finite::FiniteGroupTable;

namespace {

struct Options {
  bool json = false;
  std::uint64_t max_order = FiniteGroupTable::kDefaultMaxOrder;
};

std::string flag_str(bool b) { return b ? "yes" : "no"; }

// ---- pg ----

int cmd_pg(const Options& opt, const std::string& expr_text, bool approx) {
  const GroupExpr g = parse_group_expr(expr_text);
  const GroupProfile prof = g.profile();
  const Rational p = g.commuting_probability();
  if (opt.json) {
    nlohmann::ordered_json obj;
    obj["expr"] = g.str();
    obj["dim"] = prof.dim;
    obj["regular_rank"] = prof.regular_rank;
    obj["p"] = p.str();
    obj["reductive"] = prof.is_reductive;
    obj["nilpotent"] = prof.is_nilpotent;
    obj["abelian"] = prof.is_abelian;
    std::printf("%s\n", obj.dump().c_str());
    return 0;
  }
  std::string line = "dim=" + std::to_string(prof.dim) + " r=" + std::to_string(prof.regular_rank) +
                     " p=" + p.str();
  line += " reductive=" + flag_str(prof.is_reductive) + " nilpotent=" + flag_str(prof.is_nilpotent) +
          " abelian=" + flag_str(prof.is_abelian);
  if (approx) line += " (~" + std::to_string(p.to_double()) + ")";
  std::printf("%s\n", line.c_str());
  return 0;
}

// ---- construct ----

int cmd_construct(const Options& opt, const std::string& target_text, bool nilpotent) {
  Rational target;
  try {
    target = Rational::parse(target_text);
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: cannot parse '%s' as a rational\n", target_text.c_str());
    return 2;
  }
  const GroupExpr g = nilpotent ? construct_nilpotent(target) : construct_reductive(target);
  const Rational echo = g.commuting_probability();
  if (opt.json) {
    nlohmann::ordered_json obj;
    obj["target"] = target.str();
    obj["expr"] = g.str();
    obj["p"] = echo.str();
    obj["nilpotent"] = nilpotent;
    std::printf("%s\n", obj.dump().c_str());
  } else {
    std::printf("%s  p=%s\n", g.str().c_str(), echo.str().c_str());
  }
  return 0;
}

// ---- table ----

struct TableRow {
  std::string name;
  long long dim;
  long long rank;
  Rational p;
};

int cmd_table(const Options& opt, const std::string& which, int max_rank, bool approx) {
  const bool unipotent = which == "unipotent";
  // symbolic rows mirror the closed forms per family
  const std::vector<std::pair<std::string, std::string>> simple_formulas = {
      {"A(n) = SL(n+1)", "1/2 + 1/(2(n+2)) with n the rank; p(SL(m)) = 1/2 + 1/(2(m+1))"},
      {"B(n) = SO(2n+1)", "1/2 + 1/(2(2n+1))"},
      {"C(n) = Sp(2n)", "1/2 + 1/(2(2n+1))"},
      {"D(n) = SO(2n)", "1/2 + 1/(2(2n-1))"},
  };
  const std::vector<std::pair<std::string, std::string>> unipotent_formulas = {
      {"U(SL(m))", "1/2 + 1/m"},
      {"U(SO(2n+1))", "1/2 + 1/(2n)"},
      {"U(Sp(2n))", "1/2 + 1/(2n)"},
      {"U(SO(2n))", "1/2 + 1/(2n-2)"},
  };
  std::vector<TableRow> rows;
  for (const SimpleType& t : simple_types_up_to_rank(max_rank)) {
    TableRow row;
    if (unipotent) {
      const GroupExpr u = GroupExpr::unipotent_radical(t);
      row = {"U(" + t.name() + ")", u.dimension(), u.regular_rank(), u.commuting_probability()};
    } else {
      const GroupExpr s = GroupExpr::simple(t);
      row = {t.name(), s.dimension(), s.regular_rank(), s.commuting_probability()};
    }
    rows.push_back(row);
  }
  if (opt.json) {
    for (const TableRow& r : rows) {
      nlohmann::ordered_json obj;
      obj["name"] = r.name;
      obj["dim"] = r.dim;
      obj["rank"] = r.rank;
      obj["p"] = r.p.str();
      std::printf("%s\n", obj.dump().c_str());
    }
    return 0;
  }
  std::printf("# symbolic formulas\n");
  for (const auto& [name, formula] : (unipotent ? unipotent_formulas : simple_formulas))
    std::printf("%s | %s\n", name.c_str(), formula.c_str());
  std::printf("# rows up to rank %d\n", max_rank);
  std::printf("name | dim | rank | p%s\n", approx ? " | approx" : "");
  for (const TableRow& r : rows) {
    if (approx)
      std::printf("%s | %lld | %lld | %s | %.6f\n", r.name.c_str(), r.dim, r.rank,
                  r.p.str().c_str(), r.p.to_double());
    else
      std::printf("%s | %lld | %lld | %s\n", r.name.c_str(), r.dim, r.rank, r.p.str().c_str());
  }
  return 0;
}

// ---- verify / classes ----

std::vector<cpalg::finite::Entry> parse_q_list(const std::string& text) {
  std::vector<cpalg::finite::Entry> qs;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        if (cur.size() > 9) throw std::invalid_argument("q-list entry too large: " + cur);
        qs.push_back(static_cast<cpalg::finite::Entry>(std::stoul(cur)));
        cur.clear();
      }
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw std::invalid_argument("q-list must be comma-separated primes, e.g. 2,3,5");
    }
  }
  if (qs.empty()) throw std::invalid_argument("q-list must contain at least one prime");
  return qs;
}

// The algebraic counterpart of a finite family, for predicted dimension,
// regular rank, and the probability limit. B(n,q) is the Borel subgroup of
// GL(n), isogenous to B(SL(n)) x Gm.
GroupExpr predicted_group(Family family, int n) {
  switch (family) {
    case Family::GL: return parse_group_expr("GL(" + std::to_string(n) + ")");
    case Family::SL: return parse_group_expr("SL(" + std::to_string(n) + ")");
    case Family::U: return parse_group_expr("U(SL(" + std::to_string(n) + "))");
    case Family::B: return parse_group_expr("B(SL(" + std::to_string(n) + ")) x Gm");
  }
  throw std::logic_error("unknown family");
}

struct VerifyState {
  bool failed = false;

  void report_line(const Options& opt, const std::string& group, std::uint64_t q,
                   const std::string& metric, const std::string& value,
                   std::optional<std::string> expected = std::nullopt) {
    const bool pass = !expected || *expected == value;
    if (!pass) failed = true;
    if (opt.json) {
      std::printf("%s\n", cpalg::finite::metric_json_line(
                              group, q, metric, value,
                              expected ? std::optional<std::string_view>(*expected) : std::nullopt,
                              expected ? std::optional<std::string_view>(pass ? "PASS" : "FAIL")
                                       : std::nullopt)
                              .c_str());
    } else {
      std::string line = group + ": " + metric + "=" + value;
      if (expected) line += " expected=" + *expected + (pass ? " PASS" : " FAIL");
      std::printf("%s\n", line.c_str());
    }
  }
};

int cmd_verify(const Options& opt, const std::string& family_name, int n, const std::string& qlist,
               bool do_p, bool do_degrees, bool do_partitions) {
  const Family family = cpalg::finite::family_from_name(family_name);
  const std::vector<cpalg::finite::Entry> qs = parse_q_list(qlist);
  const bool all = !do_p && !do_degrees && !do_partitions;
  const GroupExpr predicted = predicted_group(family, n);
  VerifyState state;

  for (const auto q : qs) {
    const FiniteGroupTable t = FiniteGroupTable::enumerate(family, n, q, opt.max_order);
    const std::string group = t.name();
    state.report_line(opt, group, q, "order", std::to_string(t.order()),
                      std::to_string(FiniteGroupTable::closed_form_order(family, n, q)));
    if (all || do_p) {
      const std::uint64_t k = t.class_count();
      const Rational p = t.commuting_probability();
      if (opt.json) {
        state.report_line(opt, group, q, "class_count", std::to_string(k));
        state.report_line(opt, group, q, "pair_count", std::to_string(t.commuting_pair_count()),
                          std::to_string(k * t.order()));
        state.report_line(opt, group, q, "p", p.str());
      } else {
        std::printf("%s: p=%s (k=%llu, |G|=%u)\n", group.c_str(), p.str().c_str(),
                    static_cast<unsigned long long>(k), t.order());
        state.report_line(opt, group, q, "pair_count", std::to_string(t.commuting_pair_count()),
                          std::to_string(k * t.order()));
      }
    }
    if (all || do_partitions) {
      const auto& conj = conjugacy_classes(t);
      const auto& z = z_classes(t);
      const auto& iz = iz_classes(t);
      const auto& dz = dz_classes(t);
      state.report_line(opt, group, q, "conjugacy_classes", std::to_string(conj.block_count()));
      state.report_line(opt, group, q, "z_classes", std::to_string(z.block_count()));
      state.report_line(opt, group, q, "iz_classes", std::to_string(iz.block_count()));
      state.report_line(opt, group, q, "dz_classes", std::to_string(dz.block_count()));
      const bool chain = conj.refines(z) && z.refines(iz) && iz.refines(dz);
      state.report_line(opt, group, q, "refinement_chain", chain ? "ok" : "violated", "ok");
    }
  }

  if ((all && qs.size() >= 2) || do_degrees) {
    const std::string group =
        std::string(cpalg::finite::family_name(family)) + "(" + std::to_string(n) + ")";
    const auto holdout = cpalg::finite::next_prime_above(
        *std::max_element(qs.begin(), qs.end()));
    auto degree_check = [&](Counter counter, long long expected) {
      const std::string metric = std::string(cpalg::finite::counter_name(counter)) + " degree";
      try {
        const int got = cpalg::finite::growth_degree(family, n, counter, qs, opt.max_order);
        state.report_line(opt, group, holdout, metric, std::to_string(got),
                          std::to_string(expected));
      } catch (const cpalg::finite::OrderCapError& e) {
        state.report_line(opt, group, holdout, metric, std::string("SKIP (") + e.what() + ")");
      } catch (const cpalg::finite::GrowthError& e) {
        if (e.kind() == cpalg::finite::GrowthError::Kind::insufficient_samples) throw;
        state.report_line(opt, group, holdout, metric, std::string("ERROR (") + e.what() + ")",
                          std::to_string(expected));
      }
    };
    degree_check(Counter::order, predicted.dimension());
    degree_check(Counter::class_count, predicted.regular_rank());
  }
  return state.failed ? 1 : 0;
}

int cmd_classes(const Options& opt, const std::string& family_name, int n, unsigned q) {
  const Family family = cpalg::finite::family_from_name(family_name);
  const FiniteGroupTable t =
      FiniteGroupTable::enumerate(family, n, static_cast<cpalg::finite::Entry>(q), opt.max_order);
  const auto& conj = conjugacy_classes(t);
  const auto& z = z_classes(t);
  const auto& iz = iz_classes(t);
  const auto& dz = dz_classes(t);
  const auto regular = regular_elements(t);
  const auto min_size = t.analysis().centralizers.min_size;
  if (opt.json) {
    nlohmann::ordered_json obj;
    obj["group"] = t.name();
    obj["q"] = q;
    obj["order"] = t.order();
    obj["conjugacy"] = conj.block_count();
    obj["z"] = z.block_count();
    obj["iz"] = iz.block_count();
    obj["iz_resolved"] = iz.resolved;
    obj["dz"] = dz.block_count();
    obj["regular_elements"] = regular.size();
    obj["min_centralizer_order"] = min_size;
    auto block_sizes = [](const cpalg::finite::ClassPartition& p) {
      std::vector<std::size_t> sizes;
      for (const auto& b : p.blocks) sizes.push_back(b.size());
      return sizes;
    };
    obj["conjugacy_block_sizes"] = block_sizes(conj);
    obj["z_block_sizes"] = block_sizes(z);
    obj["iz_block_sizes"] = block_sizes(iz);
    obj["dz_block_sizes"] = block_sizes(dz);
    std::printf("%s\n", obj.dump().c_str());
    return 0;
  }
  std::printf("%s: |G|=%u conjugacy=%zu z=%zu iz=%zu%s dz=%zu\n", t.name().c_str(), t.order(),
              conj.block_count(), z.block_count(), iz.block_count(),
              iz.resolved ? "" : " (unresolved)", dz.block_count());
  std::printf("regular elements: %zu (centralizer order %u)\n", regular.size(), min_size);
  const bool chain = conj.refines(z) && z.refines(iz) && iz.refines(dz);
  std::printf("refinement chain conjugacy -> z -> iz -> dz: %s\n", chain ? "ok" : "VIOLATED");
  return chain ? 0 : 1;
}

// ---- limit ----

int cmd_limit(const Options& opt, const std::string& alpha_text, const std::string& eps_text) {
  const Rational alpha = Rational::parse(alpha_text);
  const Rational eps = Rational::parse(eps_text);
  const GroupExpr g = approach_target(alpha, eps);
  const Rational p = g.commuting_probability();
  if (opt.json) {
    nlohmann::ordered_json obj;
    obj["alpha"] = alpha.str();
    obj["eps"] = eps.str();
    obj["expr"] = g.str();
    obj["p"] = p.str();
    obj["error"] = (p - alpha).abs().str();
    std::printf("%s\n", obj.dump().c_str());
  } else {
    std::printf("%s  p=%s  |p-alpha|=%s <= %s\n", g.str().c_str(), p.str().c_str(),
                (p - alpha).abs().str().c_str(), eps.str().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commuting probabilities of connected linear algebraic groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON lines");
  app.add_option("--max-order", opt.max_order, "largest finite table to materialize")
      ->default_val(FiniteGroupTable::kDefaultMaxOrder);

  std::string expr_text;
  bool pg_approx = false;
  auto* pg = app.add_subcommand("pg", "dimension, regular rank, and p(G) of an expression");
  pg->add_option("expr", expr_text, "group expression, e.g. \"GL(2) x Gm^3\"")->required();
  pg->add_flag("--approx", pg_approx, "append a floating-point approximation");

  std::string target_text;
  bool nilpotent = false;
  auto* construct = app.add_subcommand("construct", "build a group with a prescribed p(G)");
  construct->add_option("target", target_text, "rational target in (1/2, 1]")->required();
  construct->add_flag("--nilpotent", nilpotent, "build a nilpotent group instead of a reductive one");

  std::string which;
  int max_rank = 10;
  bool table_approx = false;
  auto* table = app.add_subcommand("table", "golden tables of p(G)");
  table->add_option("which", which, "'simple' or 'unipotent'")
      ->required()
      ->check(CLI::IsMember({"simple", "unipotent"}));
  table->add_option("--max-rank", max_rank, "largest rank to instantiate")->default_val(10);
  table->add_flag("--approx", table_approx, "append floating-point approximations");

  std::string family_name;
  int degree = 2;
  std::string qlist;
  bool do_p = false;
  bool do_degrees = false;
  bool do_partitions = false;
  auto* verify = app.add_subcommand("verify", "check finite tables against the exact predictions");
  verify->add_option("family", family_name, "GL, SL, U, or B")->required();
  verify->add_option("n", degree, "matrix degree (2, 3, or 4)")->required();
  verify->add_option("q-list", qlist, "comma-separated primes, e.g. 2,3,5,7")->required();
  verify->add_flag("--p", do_p, "commuting probability and pair-count identity");
  verify->add_flag("--degrees", do_degrees, "growth degrees of order and class count");
  verify->add_flag("--partitions", do_partitions, "class partitions and the refinement chain");

  std::string cfamily;
  int cdegree = 2;
  unsigned cq = 2;
  auto* classes = app.add_subcommand("classes", "partition report for one finite table");
  classes->add_option("family", cfamily, "GL, SL, U, or B")->required();
  classes->add_option("n", cdegree, "matrix degree (2, 3, or 4)")->required();
  classes->add_option("q", cq, "prime modulus")->required();

  std::string alpha_text;
  std::string eps_text;
  auto* limit = app.add_subcommand("limit", "realize a probability within eps of alpha");
  limit->add_option("alpha", alpha_text, "value in [1/2, 1]")->required();
  limit->add_option("eps", eps_text, "positive tolerance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pg->parsed()) return cmd_pg(opt, expr_text, pg_approx);
    if (construct->parsed()) return cmd_construct(opt, target_text, nilpotent);
    if (table->parsed()) return cmd_table(opt, which, max_rank, table_approx);
    if (verify->parsed()) return cmd_verify(opt, family_name, degree, qlist, do_p, do_degrees, do_partitions);
    if (classes->parsed()) return cmd_classes(opt, cfamily, cdegree, cq);
    if (limit->parsed()) return cmd_limit(opt, alpha_text, eps_text);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cpalg::finite::OrderCapError& e) {
    std::fprintf(stderr, "error: %s (raise --max-order to allow it)\n", e.what());
    return 2;
  } catch (const cpalg::finite::GrowthError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == cpalg::finite::GrowthError::Kind::insufficient_samples ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 2;
}
