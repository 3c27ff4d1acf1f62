#include "lapvol/instance_io.hpp"

#include "lapvol/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lapvol {

namespace {

using nlohmann::json;

Rat parse_entry(const json& v, const std::string& where, const ParseOptions& options,
                std::vector<std::string>* warnings) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else if (v.is_number_float()) {
    text = v.dump();
    if (!options.tolerate_floats)
      throw Error(Errc::InvalidInput,
                  where + ": " + text +
                      " is a floating-point number; coefficients must be exact (write "
                      "\"p/q\" strings, or pass --tolerate-floats)");
  } else {
    throw Error(Errc::InvalidInput, where + ": expected a rational string");
  }
  try {
    Rat r = parse_rat(text, options.tolerate_floats);
    if (warnings && looks_decimal(text))
      warnings->push_back(where + ": decimal " + text + " read as " + to_string(r));
    return r;
  } catch (const Error& e) {
    throw Error(Errc::InvalidInput, where + ": " + e.what());
  }
}

} // namespace

PolytopeInstance parse_instance(std::string_view text, const ParseOptions& options,
                                std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("b"))
    throw Error(Errc::InvalidInput, "instance needs fields \"A\" and \"b\"");
  const json& rows = doc["A"];
  const json& rhs = doc["b"];
  if (!rows.is_array() || rows.empty() || !rhs.is_array())
    throw Error(Errc::InvalidInput, "\"A\" must be a non-empty array of rows, \"b\" an array");
  if (rows.size() != rhs.size())
    throw Error(Errc::InvalidInput, "\"A\" has " + std::to_string(rows.size()) +
                                        " rows but \"b\" has " + std::to_string(rhs.size()));
  const std::size_t n = rows[0].is_array() ? rows[0].size() : 0;
  if (n == 0)
    throw Error(Errc::InvalidInput, "rows of \"A\" must be non-empty arrays");

  PolytopeInstance inst;
  inst.a.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  inst.b.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw Error(Errc::InvalidInput, "row " + std::to_string(i) + " of \"A\" does not have " +
                                          std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      inst.a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_entry(
          rows[i][j], "A[" + std::to_string(i) + "][" + std::to_string(j) + "]", options, warnings);
    inst.b(static_cast<Eigen::Index>(i)) =
        parse_entry(rhs[i], "b[" + std::to_string(i) + "]", options, warnings);
  }
  return inst;
}

PolytopeInstance read_instance_file(const std::filesystem::path& path,
                                    const ParseOptions& options,
                                    std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::InvalidInput, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), options, warnings);
}

std::string format_instance(const PolytopeInstance& inst) {
  json doc;
  doc["A"] = json::array();
  for (Eigen::Index i = 0; i < inst.a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < inst.a.cols(); ++j)
      row.push_back(to_string(inst.a(i, j)));
    doc["A"].push_back(row);
  }
  doc["b"] = json::array();
  for (Eigen::Index i = 0; i < inst.b.size(); ++i)
    doc["b"].push_back(to_string(inst.b(i)));
  return doc.dump(2) + "\n";
}

} // namespace lapvol
