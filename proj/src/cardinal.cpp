#include "qcat/cardinal.hpp"

#include <cctype>

#include "qcat/errors.hpp"

namespace qcat {

Cardinal Cardinal::parse(std::string_view text) {
  if (text == "omega" || text == "w") return omega();
  std::string_view rest = text;
  if (rest.starts_with("aleph")) rest.remove_prefix(5);
  else throw ParseError("unknown cardinal '" + std::string(text) + "'");
  if (rest.starts_with("_")) rest.remove_prefix(1);
  if (rest.empty() || rest.size() > 6) throw ParseError("unknown cardinal '" + std::string(text) + "'");
  unsigned index = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unknown cardinal '" + std::string(text) + "'");
    index = index * 10 + static_cast<unsigned>(c - '0');
  }
  return {index};
}

}  // namespace qcat
