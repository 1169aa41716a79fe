#include "caputkit/render.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace caputkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_cell(const std::string& cell) {
  // Labels like "1^3,2" carry commas; RFC-style quoting keeps records intact.
  if (cell.find(',') == std::string::npos) return cell;
  return '"' + cell + '"';
}

std::string partition_parts_csv(const Partition& p) {
  std::string line;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(p.parts()[i]);
  }
  return line;
}

ordered_json partition_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format \"" + name +
                              "\" (expected text, csv, or json)");
}

std::string format_partitions(const std::vector<Partition>& partitions,
                              OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::text:
      for (const Partition& p : partitions) {
        out += render_partition(p);
        out += '\n';
      }
      break;
    case OutputFormat::csv:
      for (const Partition& p : partitions) {
        out += partition_parts_csv(p);
        out += '\n';
      }
      break;
    case OutputFormat::json:
      // Streamed by hand: p(60) is close to a million entries.
      out += '[';
      for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        const std::vector<int>& parts = partitions[i].parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (j > 0) out += ',';
          out += std::to_string(parts[j]);
        }
        out += ']';
      }
      out += "]\n";
      break;
  }
  return out;
}

std::string format_matrix(const CharacterMatrix& matrix, OutputFormat format) {
  const int dim = matrix.dimension();
  std::string out;
  switch (format) {
    case OutputFormat::text: {
      std::vector<std::string> row_labels(static_cast<std::size_t>(dim));
      std::vector<std::string> col_labels(static_cast<std::size_t>(dim));
      std::size_t label_width = 0;
      for (int r = 0; r < dim; ++r) {
        row_labels[static_cast<std::size_t>(r)] =
            render_partition(matrix.row_labels[static_cast<std::size_t>(r)]);
        label_width = std::max(label_width,
                               row_labels[static_cast<std::size_t>(r)].size());
      }
      std::vector<std::size_t> width(static_cast<std::size_t>(dim), 0);
      std::vector<std::vector<std::string>> cells(
          static_cast<std::size_t>(dim),
          std::vector<std::string>(static_cast<std::size_t>(dim)));
      for (int c = 0; c < dim; ++c) {
        col_labels[static_cast<std::size_t>(c)] =
            render_cycle_type(matrix.col_labels[static_cast<std::size_t>(c)]);
        width[static_cast<std::size_t>(c)] =
            col_labels[static_cast<std::size_t>(c)].size();
      }
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              matrix.value(r, c).get_str();
          width[static_cast<std::size_t>(c)] =
              std::max(width[static_cast<std::size_t>(c)],
                       cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                           .size());
        }
      }
      // Header row: class labels only, padded into the label column.
      out.append(label_width, ' ');
      for (int c = 0; c < dim; ++c) {
        out += ' ';
        const std::string& label = col_labels[static_cast<std::size_t>(c)];
        out.append(width[static_cast<std::size_t>(c)] - label.size(), ' ');
        out += label;
      }
      out += '\n';
      for (int r = 0; r < dim; ++r) {
        const std::string& label = row_labels[static_cast<std::size_t>(r)];
        out += label;
        out.append(label_width - label.size(), ' ');
        for (int c = 0; c < dim; ++c) {
          out += ' ';
          const std::string& cell =
              cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          out.append(width[static_cast<std::size_t>(c)] - cell.size(), ' ');
          out += cell;
        }
        out += '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      out += "lambda";
      for (int c = 0; c < dim; ++c) {
        out += ',';
        out += csv_cell(
            render_cycle_type(matrix.col_labels[static_cast<std::size_t>(c)]));
      }
      out += '\n';
      for (int r = 0; r < dim; ++r) {
        out += csv_cell(
            render_partition(matrix.row_labels[static_cast<std::size_t>(r)]));
        for (int c = 0; c < dim; ++c) {
          out += ',';
          out += matrix.value(r, c).get_str();
        }
        out += '\n';
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = matrix.n;
      ordered_json classes = ordered_json::array();
      for (const CycleType& rho : matrix.col_labels)
        classes.push_back(partition_json(cycle_type_to_partition(rho)));
      doc["classes"] = std::move(classes);
      ordered_json rows = ordered_json::array();
      for (int r = 0; r < dim; ++r) {
        ordered_json row;
        row["lambda"] =
            partition_json(matrix.row_labels[static_cast<std::size_t>(r)]);
        ordered_json values = ordered_json::array();
        for (int c = 0; c < dim; ++c) values.push_back(matrix.value(r, c).get_str());
        row["values"] = std::move(values);
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      out = doc.dump();
      out += '\n';
      break;
    }
  }
  return out;
}

}  // namespace caputkit
