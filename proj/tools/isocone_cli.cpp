// SPDX-License-Identifier: MIT
/**
 * @file isocone_cli.cpp
 * @brief Batch command-line front end: every verifier and table generator in
 *        the library behind one binary with reproducible, machine-readable
 *        output.
 *
 * Subcommands
 *   cone-scan      cone point counts, dimensions, and the codimension bound
 *                  over a (h, m, q) grid, brute cross-checked within budget
 *   bounds-verify  inequality sweeps with counterexample reporting
 *   dims           unipotent dimension tables (Borel and parabolic blocks)
 *   goodconfig     free-subset (coloring) numbers of corrected Gram systems
 *   chow           component index tables with optional Hodge entries
 *
 * Contract
 *   - identical flags produce byte-identical output, for any --shards value;
 *   - every CSV starts with a header row; --format json mirrors the CSV
 *     cells exactly;
 *   - exit 0 when all checks pass, 1 when a violation was found (or an
 *     internal cross-check failed), 2 on a usage error, 3 when budget-skipped
 *     rows exist but nothing was violated.
 *
 * Ranged flags take the inclusive syntax "a..b", comma lists "3,5", or a mix
 * ("1..4,9"); a reversed range is empty, so an empty grid renders as a bare
 * header.  Grid cells whose shape fails a parity rule (alternating forms with
 * odd h, symplectic groups with odd n, blocks with 2m > n) are skipped rather
 * than rejected, so ranges stay usable for every kind.  Rows are emitted in
 * grid order (outer flag first), which pins the byte-level output.
 */
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "isocone/bigint.hpp"
#include "isocone/bounds.hpp"
#include "isocone/chow.hpp"
#include "isocone/cone.hpp"
#include "isocone/forms.hpp"
#include "isocone/goodconfig.hpp"
#include "isocone/groups.hpp"
#include "isocone/report.hpp"

namespace {

using namespace isocone;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string join_semicolon(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ';';
    out += parts[i];
  }
  return out;
}

int as_int(long long v, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

/// Flags shared by every subcommand: where the table goes and as what.
struct OutputOptions {
  std::string format = "csv";
  std::string out_path;  // empty = stdout
};

/// add_subcommand plus a long-only help flag: the grid flag --h leaves no
/// room for the usual -h short alias.
CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description) {
  CLI::App* cmd = app.add_subcommand(name, description);
  cmd->set_help_flag("--help", "Print this help message and exit");
  return cmd;
}

void add_output_flags(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out->out_path, "Write the table to this file instead of stdout");
}

void emit_table(const Table& table, const OutputOptions& out) {
  const std::string text = out.format == "json" ? to_json(table) : to_csv(table);
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + out.out_path);
  }
  file << text;
}

// ----------------------------------------------------------------- cone-scan

struct ConeScanConfig {
  std::string model = "tuple";
  std::string kind = "symmetric";
  std::string h_list;
  std::string m_list;
  std::string q_list;
  long long budget = -1;  // -1 = use ISOCONE_BUDGET / built-in default
  int shards = 1;
  OutputOptions out;
};

int run_cone_scan(const ConeScanConfig& cfg) {
  const std::vector<long long> hs = parse_int_list(cfg.h_list);
  const std::vector<long long> ms = parse_int_list(cfg.m_list);
  const std::vector<long long> qs = parse_int_list(cfg.q_list);
  const bool tuple_model = cfg.model == "tuple";
  const FormKind kind = cfg.kind == "symmetric" ? FormKind::symmetric : FormKind::alternating;
  if (!tuple_model && cfg.shards != 1) {
    throw std::invalid_argument("--shards applies to the tuple model only");
  }

  Budget budget = budget_from_env();
  if (cfg.budget >= 0) budget.max_membership_tests = cfg.budget;

  Table table({"model", "kind", "h", "m", "q", "ambient", "cone_points", "dim", "codim",
               "bound", "equals_bound", "satisfies_bound", "status"});
  long violations = 0;
  long skipped = 0;
  for (long long h : hs) {
    if (kind == FormKind::alternating && h % 2 != 0) continue;
    for (long long m : ms) {
      for (long long q : qs) {
        const Field f = Field::prime(as_int(q, "q"));
        const BilinearSpace space = kind == FormKind::symmetric
                                        ? BilinearSpace::split_symmetric(f, as_int(h, "h"))
                                        : BilinearSpace::split_alternating(f, as_int(h, "h"));
        CountReport rep = [&] {
          if (tuple_model) {
            const ConeInstance inst(space, as_int(m, "m"));
            return cfg.shards > 1 ? cone_report(inst, budget, cfg.shards)
                                  : cone_report(inst, budget);
          }
          const BiorthInstance inst(space, as_int(m, "m"));
          return biorth_report(inst, budget);
        }();
        if (rep.status != "ok") ++skipped;
        if (!rep.bound_satisfied) ++violations;
        table.append_row({rep.model, rep.form_kind, std::to_string(h), std::to_string(m),
                          std::to_string(q), std::to_string(rep.ambient), big_str(rep.cone_points),
                          std::to_string(rep.dim), std::to_string(rep.codim),
                          std::to_string(rep.bound), bool_str(rep.codim == rep.bound),
                          bool_str(rep.bound_satisfied), rep.status});
      }
    }
  }
  emit_table(table, cfg.out);
  if (violations > 0) return 1;
  if (skipped > 0) return 3;
  return 0;
}

// ------------------------------------------------------------- bounds-verify

struct BoundsVerifyConfig {
  bool all = false;
  std::vector<std::string> ids;
  int n_max = 40;
  OutputOptions out;
};

InequalityReport run_sweep(const std::string& id, int n_max) {
  if (id == "cor-cone") return check_cor_cone();
  if (id == "universal-induction") return check_universal();
  if (id == "degeneration") return check_degen(2, n_max);
  if (id == "universal-base") return check_thm_universal_base();
  if (id == "degeneration-unitary") return check_degen_unitary(2, n_max);
  throw std::invalid_argument(
      "unknown sweep id '" + id +
      "' (known: cor-cone, universal-induction, degeneration, universal-base, "
      "degeneration-unitary)");
}

int run_bounds_verify(const BoundsVerifyConfig& cfg) {
  std::vector<std::string> ids = cfg.ids;
  if (cfg.all) {
    ids = {"cor-cone", "universal-induction", "degeneration", "universal-base",
           "degeneration-unitary"};
  }
  if (ids.empty()) {
    throw std::invalid_argument("specify --all or at least one --id");
  }

  Table table({"id", "ranges", "cases_checked", "counterexamples", "asserted", "pass"});
  long violations = 0;
  for (const std::string& id : ids) {
    const InequalityReport rep = run_sweep(id, cfg.n_max);
    if (rep.asserted && !rep.pass()) ++violations;
    table.append_row({rep.id, rep.ranges, std::to_string(rep.cases_checked),
                      join_semicolon(rep.counterexamples), bool_str(rep.asserted),
                      bool_str(rep.pass())});
  }
  emit_table(table, cfg.out);
  return violations > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------- dims

struct DimsConfig {
  std::string kind;
  std::string n_list;
  std::string d_list = "1";
  std::string m_list;  // empty = Borel table only
  OutputOptions out;
};

GroupKind parse_group_kind(const std::string& name) {
  if (name == "symplectic") return GroupKind::symplectic;
  if (name == "orthogonal") return GroupKind::orthogonal;
  if (name == "unitary") return GroupKind::unitary;
  throw std::invalid_argument("unknown group kind: " + name);
}

int run_dims(const DimsConfig& cfg) {
  const GroupKind kind = parse_group_kind(cfg.kind);
  const std::vector<long long> ns = parse_int_list(cfg.n_list);
  const std::vector<long long> ds = parse_int_list(cfg.d_list);
  const bool with_m = !cfg.m_list.empty();
  const std::vector<long long> ms = with_m ? parse_int_list(cfg.m_list)
                                           : std::vector<long long>{};

  std::vector<std::string> header = {"kind", "n", "d", "u_n"};
  if (with_m) {
    header.insert(header.end(),
                  {"m", "center_full", "hom_half", "center_fixed", "hom_fixed",
                   "unipotent_fixed", "unipotent_full", "convention_dependent"});
  }
  const auto opt_str = [](const std::optional<long>& v) {
    return v.has_value() ? std::to_string(*v) : std::string();
  };

  Table table(header);
  for (long long n : ns) {
    if (kind == GroupKind::symplectic && n % 2 != 0) continue;
    for (long long d : ds) {
      const long u = borel_unipotent_dim(GroupShape(kind, as_int(n, "n"), as_int(d, "d")));
      if (!with_m) {
        table.append_row({cfg.kind, std::to_string(n), std::to_string(d), std::to_string(u)});
        continue;
      }
      for (long long m : ms) {
        if (2 * m > n) continue;
        const ParabolicDims pd = parabolic_dims(ParabolicShape(kind, as_int(n, "n"), as_int(m, "m")));
        table.append_row({cfg.kind, std::to_string(n), std::to_string(d), std::to_string(u),
                          std::to_string(m), std::to_string(pd.dim_center_full),
                          std::to_string(pd.dim_hom_half), opt_str(pd.dim_center_fixed),
                          opt_str(pd.dim_hom_fixed), opt_str(pd.dim_unipotent_fixed),
                          std::to_string(pd.dim_unipotent_full),
                          bool_str(pd.fixed_dims_convention_dependent)});
      }
    }
  }
  emit_table(table, cfg.out);
  return 0;
}

// ---------------------------------------------------------------- goodconfig

struct GoodConfigConfig {
  std::string k_list = "1..3";
  std::string q_list;
  ColoringOptions options;
  OutputOptions out;
};

int run_goodconfig(const GoodConfigConfig& cfg) {
  const std::vector<long long> ks = parse_int_list(cfg.k_list);
  const std::vector<long long> qs = parse_int_list(cfg.q_list);

  Table table({"k", "q", "bound", "number", "found_free_at_bound", "free_subset",
               "any_free_above_bound", "above_bound_exhaustive", "trials_run"});
  long violations = 0;
  for (long long k : ks) {
    for (long long q : qs) {
      const ColoringResult res = coloring_number(as_int(k, "k"), q, cfg.options);
      if (res.number != res.bound || res.any_free_above_bound) ++violations;
      std::vector<std::string> subset;
      subset.reserve(res.free_subset.size());
      for (int slot : res.free_subset) subset.push_back(std::to_string(slot));
      table.append_row({std::to_string(k), std::to_string(q), std::to_string(res.bound),
                        std::to_string(res.number), bool_str(res.found_free_at_bound),
                        join_semicolon(subset), bool_str(res.any_free_above_bound),
                        bool_str(res.above_bound_exhaustive), std::to_string(res.trials_run)});
    }
  }
  emit_table(table, cfg.out);
  return violations > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------- chow

struct ChowConfig {
  std::string group;
  long long x1 = 0;
  long long base = 0;
  long long hodge_p = 0;  // 0 = no Hodge column
  bool negative = false;
  OutputOptions out;
};

int run_chow(const ChowConfig& cfg) {
  const FamilyShape shape = make_family(cfg.group);
  const bool with_hodge = cfg.hodge_p > 0;
  std::vector<long long> embedding;
  if (with_hodge) {
    // Canonical regular embedding: finite label k maps to k + 1, so labels
    // 0 .. x1-2 land on 1 .. x1-1 (all distinct, checked against [1, 2p-1]
    // by hodge_assign).
    for (long long label = 0; label + 1 < cfg.x1; ++label) embedding.push_back(label + 1);
  }

  std::vector<std::string> header = {"family", "n", "r", "base", "code", "coords",
                                     "base_component"};
  if (with_hodge) header.emplace_back("hodge");
  Table table(header);
  for (const ComponentIndex& idx : enumerate_components(shape, cfg.x1, cfg.base)) {
    const long long code = encode_component(shape, cfg.x1, cfg.base, idx);
    std::vector<std::string> coords;
    coords.reserve(idx.coords.size());
    for (const Coord& c : idx.coords) {
      coords.push_back(c.is_inf() ? std::string("inf") : std::to_string(c.label()));
    }
    std::vector<std::string> row = {chow_family_name(shape.family), std::to_string(shape.n),
                                    std::to_string(shape.r), chow_base_name(shape.base),
                                    std::to_string(code), join_semicolon(coords),
                                    std::to_string(idx.base_component)};
    if (with_hodge) {
      const HodgeVector hodge = hodge_assign(idx, cfg.hodge_p, embedding,
                                             cfg.negative ? HodgeConvention::negative
                                                          : HodgeConvention::positive);
      std::vector<std::string> entries;
      entries.reserve(hodge.entries.size());
      for (long long e : hodge.entries) entries.push_back(std::to_string(e));
      row.push_back(join_semicolon(entries));
    }
    table.append_row(std::move(row));
  }
  emit_table(table, cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "isocone: exact isotropic-cone counts, dimension tables, and inequality "
      "sweeps over small finite fields"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  ConeScanConfig scan_cfg;
  CLI::App* scan_cmd = add_command(app, 
      "cone-scan", "Count cone points over a (h, m, q) grid and check the codimension bound");
  scan_cmd->add_option("--model", scan_cfg.model, "Cone model")
      ->check(CLI::IsMember({"tuple", "biorthogonal"}))
      ->capture_default_str();
  scan_cmd->add_option("--kind", scan_cfg.kind, "Form kind (alternating skips odd h)")
      ->check(CLI::IsMember({"symmetric", "alternating"}))
      ->capture_default_str();
  scan_cmd->add_option("--h", scan_cfg.h_list, "Space dimensions, e.g. 1..4 or 2,4")->required();
  scan_cmd->add_option("--m", scan_cfg.m_list, "Tuple lengths")->required();
  scan_cmd->add_option("--q", scan_cfg.q_list, "Field sizes (odd primes <= 97)")->required();
  scan_cmd
      ->add_option("--budget", scan_cfg.budget,
                   "Membership-test budget (overrides ISOCONE_BUDGET and the built-in default)")
      ->check(CLI::PositiveNumber);
  scan_cmd
      ->add_option("--shards", scan_cfg.shards,
                   "Split the brute cross-check into this many first-row shards "
                   "(tuple model; output is shard-count independent)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(scan_cmd, &scan_cfg.out);

  BoundsVerifyConfig bounds_cfg;
  CLI::App* bounds_cmd = add_command(app, 
      "bounds-verify", "Run the inequality sweeps and report counterexamples");
  bounds_cmd->add_flag("--all", bounds_cfg.all, "Run every sweep in canonical order");
  bounds_cmd->add_option("--id", bounds_cfg.ids,
                         "Sweep id (repeatable): cor-cone, universal-induction, degeneration, "
                         "universal-base, degeneration-unitary");
  bounds_cmd
      ->add_option("--n-max", bounds_cfg.n_max, "Largest group size in the degeneration sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(bounds_cmd, &bounds_cfg.out);

  DimsConfig dims_cfg;
  CLI::App* dims_cmd =
      add_command(app, "dims", "Tabulate u_n and the parabolic block dimensions");
  dims_cmd->add_option("--kind", dims_cfg.kind, "Group kind")
      ->check(CLI::IsMember({"symplectic", "orthogonal", "unitary"}))
      ->required();
  dims_cmd->add_option("--n", dims_cfg.n_list, "Group sizes (symplectic skips odd n)")->required();
  dims_cmd->add_option("--d", dims_cfg.d_list, "Coefficient degrees")->capture_default_str();
  dims_cmd->add_option("--m", dims_cfg.m_list,
                       "Parabolic block sizes; adds the block-dimension columns (2m > n skipped)");
  add_output_flags(dims_cmd, &dims_cfg.out);

  GoodConfigConfig good_cfg;
  CLI::App* good_cmd = add_command(app, 
      "goodconfig", "Free-subset (coloring) numbers of corrected Gram systems");
  good_cmd->add_option("--k", good_cfg.k_list, "Block sizes (1..3 supported)")
      ->capture_default_str();
  good_cmd->add_option("--q", good_cfg.q_list, "Field sizes (odd primes <= 97)")->required();
  good_cmd
      ->add_option("--subsets", good_cfg.options.sampled_subsets,
                   "Above-bound subsets sampled at k = 3")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  good_cmd
      ->add_option("--trials", good_cfg.options.trials_per_subset,
                   "Assignment trials per sampled subset")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  good_cmd->add_option("--seed", good_cfg.options.seed, "Subset-sampling seed")
      ->capture_default_str();
  add_output_flags(good_cmd, &good_cfg.out);

  ChowConfig chow_cfg;
  CLI::App* chow_cmd = add_command(
      app, "chow", "Enumerate the component indices of a family in code order");
  chow_cmd->add_option("--group", chow_cfg.group, "Tower and size, e.g. GSp8, GSO7, LU5")
      ->required();
  chow_cmd
      ->add_option("--x1", chow_cfg.x1,
                   "Cardinality of the coordinate label set (includes the infinity marker)")
      ->required()
      ->check(CLI::PositiveNumber);
  chow_cmd->add_option("--base", chow_cfg.base, "Number of base components")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::Option* hodge_opt =
      chow_cmd
          ->add_option("--hodge-p", chow_cfg.hodge_p,
                       "Add Hodge entries at this p (canonical embedding: label k -> k+1)")
          ->check(CLI::PositiveNumber);
  chow_cmd->add_flag("--negative", chow_cfg.negative, "Use the negative Hodge convention")
      ->needs(hodge_opt);
  add_output_flags(chow_cmd, &chow_cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan_cmd->parsed()) return run_cone_scan(scan_cfg);
    if (bounds_cmd->parsed()) return run_bounds_verify(bounds_cfg);
    if (dims_cmd->parsed()) return run_dims(dims_cfg);
    if (good_cmd->parsed()) return run_goodconfig(good_cfg);
    if (chow_cmd->parsed()) return run_chow(chow_cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
