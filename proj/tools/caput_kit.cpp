// caput-kit: exact induced-character tables of symmetric groups, Young
// subgroup bookkeeping, and caput-style subset counting, with a built-in
// cross-verification suite. All arithmetic is exact; no floating point
// anywhere in a computation path.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "caputkit/caput.hpp"
#include "caputkit/induced.hpp"
#include "caputkit/partition.hpp"
#include "caputkit/render.hpp"
#include "caputkit/sym_group.hpp"
#include "caputkit/verify.hpp"
#include "caputkit/young.hpp"

namespace {

using caputkit::BigInt;
using caputkit::CycleType;
using caputkit::OutputFormat;
using caputkit::Partition;
using ordered_json = nlohmann::ordered_json;

constexpr int kMaxPartitionsN = 60;
constexpr int kMaxTableN = 20;
constexpr int kMaxInduceN = 40;
constexpr int kMaxOracleBound = 10;

int read_oracle_bound() {
  const char* env = std::getenv("CAPUT_ORACLE_MAX");
  if (env == nullptr) return caputkit::kDefaultOracleBound;
  const std::string text(env);
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (...) {
    used = 0;
  }
  if (used != text.size() || value < 0 || value > kMaxOracleBound) {
    throw std::invalid_argument("CAPUT_ORACLE_MAX must be an integer in [0, " +
                                std::to_string(kMaxOracleBound) + "], got \"" +
                                text + "\"");
  }
  return value;
}

ordered_json partition_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

std::vector<CycleType> class_column_order(int n) {
  const std::vector<Partition> rows = caputkit::enumerate_partitions(n);
  std::vector<CycleType> cols;
  cols.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    cols.push_back(caputkit::partition_to_cycle_type(*it));
  return cols;
}

void print_partitions(int n, OutputFormat format) {
  std::cout << caputkit::format_partitions(caputkit::enumerate_partitions(n),
                                           format);
}

void print_table(int n, OutputFormat format) {
  std::cout << caputkit::format_matrix(caputkit::character_matrix(n), format);
}

Partition parse_partition_of(int n, const std::string& text, const char* flag) {
  Partition p = caputkit::parse_partition(text);
  if (p.weight() != n) {
    throw std::invalid_argument(std::string(flag) + " " + text +
                                " has weight " + std::to_string(p.weight()) +
                                ", expected " + std::to_string(n));
  }
  return p;
}

void print_induce(int n, const std::string& lambda_text,
                  const std::optional<std::string>& class_text, bool show_work,
                  OutputFormat format) {
  const Partition lambda = parse_partition_of(n, lambda_text, "--lambda");
  if (!class_text) {
    const std::vector<CycleType> cols = class_column_order(n);
    std::vector<BigInt> values;
    values.reserve(cols.size());
    for (const CycleType& rho : cols)
      values.push_back(caputkit::induced_value_quotient(lambda, rho));
    switch (format) {
      case OutputFormat::text:
      case OutputFormat::csv: {
        const char sep = format == OutputFormat::text ? ' ' : ',';
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (i > 0) std::cout << sep;
          std::cout << values[i].get_str();
        }
        std::cout << '\n';
        break;
      }
      case OutputFormat::json: {
        ordered_json doc;
        doc["n"] = n;
        doc["lambda"] = partition_json(lambda);
        ordered_json classes = ordered_json::array();
        for (const CycleType& rho : cols)
          classes.push_back(partition_json(caputkit::cycle_type_to_partition(rho)));
        doc["classes"] = std::move(classes);
        ordered_json vals = ordered_json::array();
        for (const BigInt& v : values) vals.push_back(v.get_str());
        doc["values"] = std::move(vals);
        std::cout << doc.dump() << '\n';
        break;
      }
    }
    return;
  }

  const CycleType rho =
      caputkit::partition_to_cycle_type(parse_partition_of(n, *class_text, "--class"));
  const BigInt value = caputkit::induced_value_quotient(lambda, rho);
  if (!show_work) {
    switch (format) {
      case OutputFormat::text:
      case OutputFormat::csv:
        std::cout << value.get_str() << '\n';
        break;
      case OutputFormat::json: {
        ordered_json doc;
        doc["n"] = n;
        doc["lambda"] = partition_json(lambda);
        doc["class"] = partition_json(caputkit::cycle_type_to_partition(rho));
        doc["value"] = value.get_str();
        std::cout << doc.dump() << '\n';
        break;
      }
    }
    return;
  }

  const BigInt group = caputkit::group_order(n);
  const BigInt young = caputkit::young_order(lambda);
  const BigInt cls = caputkit::class_size(n, rho);
  const BigInt meet = caputkit::intersection_count(lambda, rho);
  switch (format) {
    case OutputFormat::text:
      std::cout << "group_order = " << group.get_str() << '\n'
                << "young_order = " << young.get_str() << '\n'
                << "class_size = " << cls.get_str() << '\n'
                << "intersection_count = " << meet.get_str() << '\n'
                << "value = " << value.get_str() << '\n';
      break;
    case OutputFormat::csv:
      std::cout << "group_order,young_order,class_size,intersection_count,value\n"
                << group.get_str() << ',' << young.get_str() << ',' << cls.get_str()
                << ',' << meet.get_str() << ',' << value.get_str() << '\n';
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = n;
      doc["lambda"] = partition_json(lambda);
      doc["class"] = partition_json(caputkit::cycle_type_to_partition(rho));
      ordered_json work;
      work["group_order"] = group.get_str();
      work["young_order"] = young.get_str();
      work["class_size"] = cls.get_str();
      work["intersection_count"] = meet.get_str();
      doc["work"] = std::move(work);
      doc["value"] = value.get_str();
      std::cout << doc.dump() << '\n';
      break;
    }
  }
}

void print_caput_variations(int n, const std::string& lambda_text,
                            const std::string& class_text, OutputFormat format) {
  const Partition lambda = parse_partition_of(n, lambda_text, "--lambda");
  const CycleType rho =
      caputkit::partition_to_cycle_type(parse_partition_of(n, class_text, "--class"));
  const caputkit::CaputAnswer answer =
      caputkit::caput_variations(caputkit::CaputQuery(n, lambda, rho));
  switch (format) {
    case OutputFormat::text:
    case OutputFormat::csv:
      std::cout << answer.value.get_str() << '\n';
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = n;
      doc["lambda"] = partition_json(answer.query.lambda);
      doc["class"] = partition_json(caputkit::cycle_type_to_partition(answer.query.rho));
      doc["value"] = answer.value.get_str();
      std::cout << doc.dump() << '\n';
      break;
    }
  }
}

void print_caput_combinations(int n, int k, int c, bool all_sizes,
                              OutputFormat format) {
  // The c <= k <= n contract is validated either way; with --all-sizes the
  // reported count ranges over every size, so k does not enter the value.
  const BigInt checked = caputkit::caput_combinations(n, k, c);
  const BigInt value =
      all_sizes ? caputkit::caput_combinations_all_sizes(n, c) : checked;
  switch (format) {
    case OutputFormat::text:
    case OutputFormat::csv:
      std::cout << value.get_str() << '\n';
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = n;
      doc["k"] = k;
      doc["c"] = c;
      doc["all_sizes"] = all_sizes;
      doc["value"] = value.get_str();
      std::cout << doc.dump() << '\n';
      break;
    }
  }
}

int run_verify(int n_max) {
  caputkit::VerifyOptions options;
  options.oracle_bound = read_oracle_bound();
  if (n_max > options.oracle_bound) {
    throw std::invalid_argument(
        "verify: n_max=" + std::to_string(n_max) +
        " exceeds the oracle bound " + std::to_string(options.oracle_bound) +
        " (set CAPUT_ORACLE_MAX to raise it, up to " +
        std::to_string(kMaxOracleBound) + ")");
  }
  const caputkit::VerifyReport report = caputkit::run_verification(n_max, options);
  for (const caputkit::VerifyLevel& level : report.levels) {
    std::cout << "n=" << level.n << (level.passed ? " ok" : " FAIL")
              << " (pairs=" << level.pairs;
    if (level.fixture_checked && level.passed) std::cout << ", fixture ok";
    std::cout << ")\n";
  }
  if (report.first_mismatch) {
    const caputkit::VerifyMismatch& m = *report.first_mismatch;
    std::cout << "first mismatch: n=" << m.n << " check=\"" << m.check
              << "\" lambda=" << m.lambda << " rho=" << m.rho << ": "
              << m.detail << '\n';
  }
  std::cout << "verify: " << (report.passed ? "PASS" : "FAIL") << " (n <= "
            << n_max << ")\n";
  return caputkit::verify_exit_code(report);
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format: text, csv, or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact induced characters of symmetric groups from Young subgroups,\n"
      "with partition utilities, caput-style subset counts, and a\n"
      "cross-verification suite."};
  app.require_subcommand(1);
  int exit_status = 0;

  // partitions
  {
    auto* cmd = app.add_subcommand(
        "partitions", "List the partitions of n in descending lexicographic order");
    auto n = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("n", *n, "Weight to partition")
        ->required()
        ->check(CLI::Range(0, kMaxPartitionsN));
    add_format_option(cmd, *format);
    cmd->callback([n, format] {
      print_partitions(*n, caputkit::parse_output_format(*format));
    });
  }

  // table
  {
    auto* cmd = app.add_subcommand(
        "table", "Print the full induced-character table of S_n");
    auto n = std::make_shared<int>(1);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("n", *n, "Symmetric group degree")
        ->required()
        ->check(CLI::Range(1, kMaxTableN));
    add_format_option(cmd, *format);
    cmd->callback([n, format] {
      print_table(*n, caputkit::parse_output_format(*format));
    });
  }

  // induce
  {
    auto* cmd = app.add_subcommand(
        "induce",
        "Induced-character values for one Young subgroup: the whole row, or a "
        "single class");
    auto n = std::make_shared<int>(1);
    auto lambda = std::make_shared<std::string>();
    auto cls = std::make_shared<std::string>();
    auto show_work = std::make_shared<bool>(false);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("n", *n, "Symmetric group degree")
        ->required()
        ->check(CLI::Range(1, kMaxInduceN));
    cmd->add_option("--lambda", *lambda,
                    "Young subgroup shape, e.g. 3,2 or 2^2,1")
        ->required();
    auto* cls_opt =
        cmd->add_option("--class", *cls, "Conjugacy class, e.g. 2,1^3");
    cmd->add_flag("--show-work", *show_work,
                  "Print the quotient components (group order, subgroup order, "
                  "class size, intersection count)")
        ->needs(cls_opt);
    add_format_option(cmd, *format);
    cmd->callback([n, lambda, cls, show_work, format, cls_opt] {
      std::optional<std::string> class_text;
      if (cls_opt->count() > 0) class_text = *cls;
      print_induce(*n, *lambda, class_text, *show_work,
                   caputkit::parse_output_format(*format));
    });
  }

  // caput
  {
    auto* cmd = app.add_subcommand(
        "caput", "Count structures containing a prescribed caput");
    cmd->require_subcommand(1);

    auto* variations = cmd->add_subcommand(
        "variations",
        "Group-theoretic count: the induced-character value phi^lambda_rho");
    auto vn = std::make_shared<int>(1);
    auto vlambda = std::make_shared<std::string>();
    auto vclass = std::make_shared<std::string>();
    auto vformat = std::make_shared<std::string>("text");
    variations->add_option("n", *vn, "Symmetric group degree")
        ->required()
        ->check(CLI::Range(1, kMaxInduceN));
    variations->add_option("--lambda", *vlambda, "Young subgroup shape")->required();
    variations->add_option("--class", *vclass, "Conjugacy class")->required();
    add_format_option(variations, *vformat);
    variations->callback([vn, vlambda, vclass, vformat] {
      print_caput_variations(*vn, *vlambda, *vclass,
                             caputkit::parse_output_format(*vformat));
    });

    auto* combinations = cmd->add_subcommand(
        "combinations",
        "Elementary count: k-subsets of an n-set containing a fixed c-subset");
    auto cn = std::make_shared<int>(1);
    auto ck = std::make_shared<int>(1);
    auto cc = std::make_shared<int>(0);
    auto all_sizes = std::make_shared<bool>(false);
    auto cformat = std::make_shared<std::string>("text");
    combinations->add_option("n", *cn, "Set size")->required()
        ->check(CLI::Range(1, 1000000));
    combinations->add_option("k", *ck, "Subset size")->required();
    combinations->add_option("c", *cc, "Caput size (c <= k <= n)")->required();
    combinations->add_flag("--all-sizes", *all_sizes,
                           "Count subsets of every size instead (2^(n-c); k is "
                           "still validated)");
    add_format_option(combinations, *cformat);
    combinations->callback([cn, ck, cc, all_sizes, cformat] {
      print_caput_combinations(*cn, *ck, *cc, *all_sizes,
                               caputkit::parse_output_format(*cformat));
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand(
        "verify",
        "Cross-check class sizes, both induced-character routes, direct "
        "counting, and reciprocity for every n <= n_max");
    auto n_max = std::make_shared<int>(0);
    cmd->add_option("n_max", *n_max,
                    "Verify all degrees up to this one (<= oracle bound; "
                    "default bound 7, override with CAPUT_ORACLE_MAX)")
        ->required()
        ->check(CLI::Range(0, kMaxOracleBound));
    cmd->callback([n_max, &exit_status] { exit_status = run_verify(*n_max); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    // logic_error and friends: an internal identity failed, not bad usage.
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
