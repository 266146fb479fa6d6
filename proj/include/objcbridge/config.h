#ifndef OBJCBRIDGE_CONFIG_H
#define OBJCBRIDGE_CONFIG_H

#include <map>
#include <string>
#include <vector>

#include "objcbridge/types.h"

namespace objcbridge {

// Declarative project configuration. Line-oriented file format:
//
//   class = Heatbug
//   bridge = step              # methods whose bodies move to C++
//   opaque = MyAlias           # extra typedef names usable in headers
//   cpp = /usr/local/gcc2/bin/g++
//   objc-objects = HeatSpace.o, main.o
//   main-extra-deps = HeatSpace.h
//
//   [typedefs]
//   HeatValue = int
//   maxHeat = extern const HeatValue
//
//   [base-chain]
//   Heatbug = SwarmObject
//
//   [exports]
//   # name | return | receiver class | receiver param | pieces
//   objc_getHeat | int | HeatSpace | heatobj | getValueAtX:int px, Y:int py
struct ToolConfig {
  std::string class_name;
  std::vector<std::string> opaque_typedefs;
  std::vector<std::string> bridged_methods;
  std::map<std::string, std::string> base_chain;
  std::vector<SelectorExportSpec> selector_exports;
  std::vector<TypedefSpec> typedef_specs;

  // Used only inside emitted build text; never executed.
  std::string cpp_compiler = "/usr/local/gcc2/bin/g++";

  // Reverse build plan: Objective-C objects between <Class>.mo and
  // <Class>ExportObjc.o, and extra header prerequisites of main.o.
  std::vector<std::string> objc_objects = {"main.o"};
  std::vector<std::string> main_extra_deps;

  // True when `name` parses as a translatable scalar typedef: either
  // listed under `opaque` or an alias from [typedefs] (extern-const
  // entries declare constants, not types, and do not count).
  bool is_opaque_typedef(const std::string& name) const;
};

Result<ToolConfig> parse_config(const std::string& text);
Result<ToolConfig> load_config(const std::string& path);

} // namespace objcbridge

#endif
