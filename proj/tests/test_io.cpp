#include "lapvol/error.hpp"
#include "lapvol/instance_io.hpp"
#include "lapvol/oracle.hpp"

#include <doctest.h>

using namespace lapvol;

namespace {

Errc parse_code(const char* text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

} // namespace

TEST_CASE("instance files parse exactly") {
  auto inst = parse_instance(R"({"A": [["1", "1/3"], [-2, "2"]], "b": ["1", "5/2"]})");
  CHECK(inst.a(0, 1) == Rat(1, 3));
  CHECK(inst.a(1, 0) == -2);
  CHECK(inst.b(1) == Rat(5, 2));
}

TEST_CASE("malformed instance files") {
  CHECK(parse_code("{") == Errc::InvalidInput);
  CHECK(parse_code(R"({"A": [["1"]]})") == Errc::InvalidInput);
  CHECK(parse_code(R"({"A": [["1", "2"], ["1"]], "b": ["1", "1"]})") == Errc::InvalidInput);
  CHECK(parse_code(R"({"A": [["1"]], "b": ["1", "1"]})") == Errc::InvalidInput);
  CHECK(parse_code(R"({"A": [["x"]], "b": ["1"]})") == Errc::InvalidInput);
  CHECK(parse_code(R"({"A": [], "b": []})") == Errc::InvalidInput);
}

TEST_CASE("floats need an explicit opt-in") {
  const char* text = R"({"A": [[0.5, "0.25"]], "b": ["1"]})";
  CHECK(parse_code(text) == Errc::InvalidInput);
  std::vector<std::string> warnings;
  auto inst = parse_instance(text, {true}, &warnings);
  CHECK(inst.a(0, 0) == Rat(1, 2));
  CHECK(inst.a(0, 1) == Rat(1, 4));
  CHECK(warnings.size() == 2);
}

TEST_CASE("format round trip") {
  auto inst = known_instance(PaperExample{}).instance;
  auto back = parse_instance(format_instance(inst));
  CHECK(back.a == inst.a);
  CHECK(back.b == inst.b);
}
