#include "objcbridge/types.h"

#include "objcbridge/text_util.h"

#include <set>

namespace objcbridge {

std::string render_type(const TypeRef& t) {
  std::string s = t.base_name;
  if (t.is_pointer) s += " *";
  if (t.is_reference) s += " &";
  return s;
}

std::string extents_text(const std::vector<int>& extents) {
  std::string s;
  for (int e : extents) {
    s += "[";
    s += std::to_string(e);
    s += "]";
  }
  return s;
}

bool is_primitive_name(const std::string& name) {
  static const std::set<std::string> primitives = {
      "void",  "char",     "signed char", "unsigned char",
      "short", "unsigned short", "int",   "unsigned",
      "long",  "unsigned long",  "float", "double",
  };
  return primitives.count(name) != 0;
}

bool TypedefSpec::is_extern_const() const {
  return starts_with(trim(underlying_text), "extern");
}

} // namespace objcbridge
