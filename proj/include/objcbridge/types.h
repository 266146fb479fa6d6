#ifndef OBJCBRIDGE_TYPES_H
#define OBJCBRIDGE_TYPES_H

#include <optional>
#include <string>
#include <vector>

namespace objcbridge {

// Classification of a parsed C/C++ type as it crosses the bridge.
enum class TypeKind {
  primitive,      // the fixed C scalar set (char, int, double, ...)
  objc_id,        // the opaque Objective-C object handle
  objc_t_ref,     // objc_t& -- the variadic-argument cursor parameter
  opaque_typedef, // configured typedef name, bridged by name
  cpp_only,       // anything else; never translated
  unspecified,    // base type not recorded (.cd files carry none for fields)
};

struct TypeRef {
  std::string base_name;
  bool is_reference = false;
  bool is_pointer = false;
  std::vector<int> array_extents; // outermost first; empty for scalars
  TypeKind kind = TypeKind::primitive;

  bool operator==(const TypeRef&) const = default;
};

// "unsigned char *", "objc_t &", "vector<int>"; extents are not included.
std::string render_type(const TypeRef& t);
// "[2][4]" ("" for scalars)
std::string extents_text(const std::vector<int>& extents);

// Membership in the supported C scalar set, canonical spelling.
bool is_primitive_name(const std::string& name);

struct FieldDescriptor {
  std::string name;
  TypeRef type;
  int declaration_order = 0; // zero-based position among public fields

  bool operator==(const FieldDescriptor&) const = default;
};

struct ParameterDescriptor {
  std::string name;
  TypeRef type;
  int position = 0;

  bool operator==(const ParameterDescriptor&) const = default;
};

enum class PassingMode { standard, varargs, cpp_only };

struct MethodDescriptor {
  std::string name;
  TypeRef return_type;
  std::vector<ParameterDescriptor> params;
  PassingMode passing_mode = PassingMode::standard;
  // Argument list as written in the source ("double x1, objc_t& buf"),
  // kept verbatim so .cd emission can quote it unchanged.
  std::string param_text;

  bool operator==(const MethodDescriptor&) const = default;
};

struct ClassDescription {
  std::string class_name;
  std::string base_name; // "objc_obj" in the forward direction
  std::vector<FieldDescriptor> fields;
  std::vector<MethodDescriptor> methods;

  bool operator==(const ClassDescription&) const = default;
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  int line = 0; // 1-based; 0 when no source position applies
  std::string message;
};

template <class T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result failure(int line, std::string message) {
    Result r;
    r.diagnostics.push_back({Severity::error, line, std::move(message)});
    return r;
  }
};

// Reverse-direction declarative specs, normally supplied via config.

struct SelectorPiece {
  std::string keyword;
  std::string arg_type_text; // empty for a bare (argument-less) piece
  std::string arg_name;

  bool operator==(const SelectorPiece&) const = default;
};

struct SelectorExportSpec {
  std::string export_function_name; // "objc_getHeat"
  std::string receiver_class;       // "HeatSpace"
  std::string receiver_param;       // "heatobj"
  std::string return_type_text;     // "int", "void", ...
  std::vector<SelectorPiece> pieces;

  bool operator==(const SelectorExportSpec&) const = default;
};

struct TypedefSpec {
  std::string alias;
  std::string underlying_text; // "int", "enum {cold,hot}", "extern const HeatValue"

  bool is_extern_const() const;
  bool operator==(const TypedefSpec&) const = default;
};

} // namespace objcbridge

#endif
