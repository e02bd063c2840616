#include "hpt/export.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hpt {

namespace {

using json = nlohmann::ordered_json;

std::string node_id(long n, std::size_t k) {
  return "n" + std::to_string(n) + "_k" + std::to_string(k);
}

void style_for(const DotStyle& style, NodeKind kind, std::string& shape,
               std::string& color) {
  switch (kind) {
    case NodeKind::TypeA:
      shape = style.shape_a;
      color = style.color_a;
      break;
    case NodeKind::TypeB:
      shape = style.shape_b;
      color = style.color_b;
      break;
    default:
      shape = style.shape_winger;
      color = style.color_winger;
      break;
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string to_dot(const std::vector<Row>& rows, const DotStyle& style) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].n != static_cast<long>(i))
      throw std::invalid_argument("rows must be consecutive from row 0");

  std::ostringstream out;
  out << "digraph hyperbolic_pascal {\n";
  out << "  node [style=filled];\n";
  for (const Row& row : rows) {
    for (std::size_t k = 0; k < row.nodes.size(); ++k) {
      std::string shape, color;
      style_for(style, row.nodes[k].kind, shape, color);
      out << "  \"" << node_id(row.n, k) << "\" [label=\""
          << row.nodes[k].value.str() << "\", shape=" << shape
          << ", fillcolor=" << color << "];\n";
    }
  }
  for (const Row& row : rows) {
    if (row.n == 0) continue;
    for (std::size_t k = 0; k < row.nodes.size(); ++k) {
      const Node& node = row.nodes[k];
      for (int a = 0; a < node.asc_count; ++a)
        out << "  \"" << node_id(row.n - 1, node.asc[a]) << "\" -> \""
            << node_id(row.n, k) << "\";\n";
    }
  }
  if (style.rank_by_row) {
    for (const Row& row : rows) {
      out << "  { rank=same;";
      for (std::size_t k = 0; k < row.nodes.size(); ++k)
        out << " \"" << node_id(row.n, k) << "\";";
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

TableFormat parse_format(const std::string& token) {
  if (token == "plain") return TableFormat::Plain;
  if (token == "csv") return TableFormat::Csv;
  if (token == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format token: " + token);
}

std::string rows_to_table(int q, const std::vector<Row>& rows,
                          TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      out << "n,k,type,value\n";
      for (const Row& row : rows)
        for (std::size_t k = 0; k < row.nodes.size(); ++k)
          out << row.n << ',' << k << ',' << kind_code(row.nodes[k].kind)
              << ',' << row.nodes[k].value.str() << '\n';
      break;
    }
    case TableFormat::Json: {
      json doc;
      doc["q"] = q;
      doc["rows"] = json::array();
      for (const Row& row : rows) {
        json entry;
        entry["n"] = row.n;
        entry["types"] = json::array();
        entry["values"] = json::array();
        for (const Node& node : row.nodes) {
          entry["types"].push_back(kind_code(node.kind));
          entry["values"].push_back(node.value.str());
        }
        doc["rows"].push_back(std::move(entry));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case TableFormat::Plain: {
      std::size_t width = 1;
      for (const Row& row : rows)
        for (const Node& node : row.nodes)
          width = std::max(width, node.value.str().size());
      for (const Row& row : rows) {
        out << "row " << row.n << ":";
        for (const Node& node : row.nodes)
          out << ' ' << pad(node.value.str(), width);
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string report_to_table(const SumsReport& report, TableFormat format,
                            const BigInt* weight_v, const BigInt* weight_w) {
  const bool weighted = weight_v && weight_w;
  auto weighted_sum = [&](const ReportEntry& e) -> BigInt {
    return ((*weight_v + *weight_w) * e.s_hat +
            (*weight_v - *weight_w) * e.alt_closed) /
           2;
  };
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      out << "n,s,s_hat,alt_direct,alt_closed,subA,subB"
          << (weighted ? ",weighted" : "") << '\n';
      for (const ReportEntry& e : report.entries) {
        out << e.n << ',' << e.s.str() << ',' << e.s_hat.str() << ','
            << e.alt_direct.str() << ',' << e.alt_closed.str() << ','
            << e.sub_a.str() << ',' << e.sub_b.str();
        if (weighted) out << ',' << weighted_sum(e).str();
        out << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      json doc;
      doc["q"] = report.q;
      doc["entries"] = json::array();
      for (const ReportEntry& e : report.entries) {
        json entry;
        entry["n"] = e.n;
        entry["s"] = e.s.str();
        entry["s_hat"] = e.s_hat.str();
        entry["alt_direct"] = e.alt_direct.str();
        entry["alt_closed"] = e.alt_closed.str();
        entry["subA"] = e.sub_a.str();
        entry["subB"] = e.sub_b.str();
        if (weighted) entry["weighted"] = weighted_sum(e).str();
        doc["entries"].push_back(std::move(entry));
      }
      doc["failures"] = json::array();
      for (const Mismatch& m : report.failures) {
        json failure;
        failure["identity"] = m.identity;
        failure["n"] = m.n;
        failure["expected"] = m.expected;
        failure["actual"] = m.actual;
        doc["failures"].push_back(std::move(failure));
      }
      if (report.truncated) doc["truncated_at"] = report.truncated_at;
      out << doc.dump(2) << '\n';
      break;
    }
    case TableFormat::Plain: {
      std::vector<std::string> headers = {"n",          "s",    "s_hat",
                                          "alt_direct", "alt_closed",
                                          "subA",       "subB"};
      if (weighted) headers.push_back("weighted");
      const std::size_t cols = headers.size();
      std::vector<std::size_t> widths(cols);
      for (std::size_t c = 0; c < cols; ++c) widths[c] = headers[c].size();
      std::vector<std::vector<std::string>> cells;
      for (const ReportEntry& e : report.entries) {
        std::vector<std::string> line = {std::to_string(e.n), e.s.str(),
                                         e.s_hat.str(), e.alt_direct.str(),
                                         e.alt_closed.str(), e.sub_a.str(),
                                         e.sub_b.str()};
        if (weighted) line.push_back(weighted_sum(e).str());
        for (std::size_t c = 0; c < cols; ++c)
          widths[c] = std::max(widths[c], line[c].size());
        cells.push_back(std::move(line));
      }
      for (std::size_t c = 0; c < cols; ++c)
        out << (c ? "  " : "") << pad(headers[c], widths[c]);
      out << '\n';
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < cols; ++c)
          out << (c ? "  " : "") << pad(line[c], widths[c]);
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::vector<CsvCell> parse_csv(const std::string& text) {
  std::vector<CsvCell> cells;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line != "n,k,type,value")
        throw std::invalid_argument("bad CSV header: " + line);
      continue;
    }
    if (line.empty()) continue;
    std::istringstream fields(line);
    CsvCell cell;
    std::string token;
    std::getline(fields, token, ',');
    cell.n = std::stol(token);
    std::getline(fields, token, ',');
    cell.k = std::stol(token);
    std::getline(fields, cell.type, ',');
    std::getline(fields, cell.value, ',');
    if (cell.type.empty() || cell.value.empty())
      throw std::invalid_argument("bad CSV line: " + line);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string emit_csv(const std::vector<CsvCell>& cells) {
  std::ostringstream out;
  out << "n,k,type,value\n";
  for (const CsvCell& cell : cells)
    out << cell.n << ',' << cell.k << ',' << cell.type << ',' << cell.value
        << '\n';
  return out.str();
}

}  // namespace hpt
