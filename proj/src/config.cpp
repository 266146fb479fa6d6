#include "objcbridge/config.h"

#include <fstream>
#include <sstream>

#include "objcbridge/text_util.h"

namespace objcbridge {

bool ToolConfig::is_opaque_typedef(const std::string& name) const {
  for (const auto& t : opaque_typedefs)
    if (t == name) return true;
  for (const auto& spec : typedef_specs)
    if (!spec.is_extern_const() && spec.alias == name) return true;
  return false;
}

namespace {

// "getValueAtX:int px, Y:int py" or a bare "reset"
Result<std::vector<SelectorPiece>> parse_pieces(const std::string& text, int line) {
  std::vector<SelectorPiece> pieces;
  for (const auto& raw : split_list(text)) {
    SelectorPiece piece;
    size_t colon = raw.find(':');
    if (colon == std::string::npos) {
      piece.keyword = trim(raw);
      if (piece.keyword.empty())
        return Result<std::vector<SelectorPiece>>::failure(line, "empty selector piece");
    } else {
      piece.keyword = trim(raw.substr(0, colon));
      std::string rest = trim(raw.substr(colon + 1));
      size_t space = rest.find_last_of(" \t");
      if (piece.keyword.empty() || space == std::string::npos)
        return Result<std::vector<SelectorPiece>>::failure(
            line, "selector piece must be 'keyword:type name'");
      piece.arg_type_text = trim(rest.substr(0, space));
      piece.arg_name = trim(rest.substr(space + 1));
    }
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty())
    return Result<std::vector<SelectorPiece>>::failure(line, "export has no selector");
  return Result<std::vector<SelectorPiece>>::success(std::move(pieces));
}

Result<SelectorExportSpec> parse_export_row(const std::string& row, int line) {
  auto fields = split(row, '|');
  if (fields.size() != 5)
    return Result<SelectorExportSpec>::failure(
        line, "export row needs 5 '|' separated fields: name | return | receiver class | receiver param | pieces");
  SelectorExportSpec spec;
  spec.export_function_name = fields[0];
  spec.return_type_text = fields[1];
  spec.receiver_class = fields[2];
  spec.receiver_param = fields[3];
  for (const auto* f : {&spec.export_function_name, &spec.return_type_text,
                        &spec.receiver_class, &spec.receiver_param}) {
    if (f->empty())
      return Result<SelectorExportSpec>::failure(line, "export row has an empty field");
  }
  auto pieces = parse_pieces(fields[4], line);
  if (!pieces.ok()) {
    Result<SelectorExportSpec> r;
    r.diagnostics = pieces.diagnostics;
    return r;
  }
  spec.pieces = *pieces;
  return Result<SelectorExportSpec>::success(std::move(spec));
}

} // namespace

Result<ToolConfig> parse_config(const std::string& text) {
  ToolConfig cfg;
  bool objc_objects_set = false;
  std::string section; // "" = top
  int line_no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        return Result<ToolConfig>::failure(line_no, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "typedefs" && section != "base-chain" && section != "exports")
        return Result<ToolConfig>::failure(line_no, "unknown section [" + section + "]");
      continue;
    }

    if (section == "exports") {
      auto spec = parse_export_row(line, line_no);
      if (!spec.ok()) {
        Result<ToolConfig> r;
        r.diagnostics = spec.diagnostics;
        return r;
      }
      cfg.selector_exports.push_back(*spec);
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos)
      return Result<ToolConfig>::failure(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (section == "typedefs") {
      if (value.empty())
        return Result<ToolConfig>::failure(line_no, "typedef '" + key + "' has no definition");
      cfg.typedef_specs.push_back({key, value});
    } else if (section == "base-chain") {
      if (key.empty() || value.empty())
        return Result<ToolConfig>::failure(line_no, "base-chain entry needs 'class = base'");
      cfg.base_chain[key] = value;
    } else if (key == "class") {
      cfg.class_name = value;
    } else if (key == "bridge") {
      cfg.bridged_methods = split_list(value);
    } else if (key == "opaque") {
      cfg.opaque_typedefs = split_list(value);
    } else if (key == "cpp") {
      cfg.cpp_compiler = value;
    } else if (key == "objc-objects") {
      cfg.objc_objects = split_list(value);
      objc_objects_set = true;
    } else if (key == "main-extra-deps") {
      cfg.main_extra_deps = split_list(value);
    } else {
      return Result<ToolConfig>::failure(line_no, "unknown key '" + key + "'");
    }
  }
  (void)objc_objects_set;
  return Result<ToolConfig>::success(std::move(cfg));
}

Result<ToolConfig> load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Result<ToolConfig>::failure(0, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace objcbridge
