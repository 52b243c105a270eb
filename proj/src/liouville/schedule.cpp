#include "lvt/liouville/schedule.hpp"

#include "lvt/exact/error.hpp"

namespace lvt {

ExponentSchedule::ExponentSchedule(Kind kind, Integer param, std::vector<Integer> values)
    : kind_(kind), param_(std::move(param)), values_(std::move(values)) {}

ExponentSchedule ExponentSchedule::factorial() { return ExponentSchedule(Kind::Factorial, 0, {}); }

ExponentSchedule ExponentSchedule::geometric(const Integer& ratio) {
  if (ratio < 2) throw Error(ErrorCode::InvalidArgument, "geometric schedule needs ratio >= 2");
  return ExponentSchedule(Kind::Geometric, ratio, {});
}

ExponentSchedule ExponentSchedule::tower(const Integer& base) {
  if (base < 2) throw Error(ErrorCode::InvalidArgument, "tower schedule needs base >= 2");
  return ExponentSchedule(Kind::Tower, base, {});
}

ExponentSchedule ExponentSchedule::explicit_list(std::vector<Integer> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "explicit schedule is empty");
  if (values.front() < 1) throw Error(ErrorCode::InvalidArgument, "schedule exponents must be positive");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1]) throw Error(ErrorCode::InvalidArgument, "schedule must be strictly increasing");
  return ExponentSchedule(Kind::Explicit, 0, std::move(values));
}

ExponentSchedule ExponentSchedule::parse(std::string_view text) {
  if (text == "factorial") return factorial();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "unknown schedule '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon), arg = text.substr(colon + 1);
  if (kind == "geometric") return geometric(parse_integer(arg));
  if (kind == "tower") return tower(parse_integer(arg));
  if (kind == "list") {
    std::vector<Integer> v;
    while (!arg.empty()) {
      auto comma = arg.find(',');
      v.push_back(parse_integer(arg.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      arg = arg.substr(comma + 1);
    }
    return explicit_list(std::move(v));
  }
  throw Error(ErrorCode::ParseError, "unknown schedule '" + std::string(text) + "'");
}

Integer ExponentSchedule::v(unsigned long n) const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "schedule index starts at 1");
  switch (kind_) {
    case Kind::Factorial: {
      Integer f = 1;
      for (unsigned long i = 2; i <= n; ++i) f *= i;
      return f;
    }
    case Kind::Geometric: return pow(param_, n);
    case Kind::Tower: {
      Integer t = param_;
      for (unsigned long i = 1; i < n; ++i) {
        if (!t.fits_ulong_p() || t > 4294967296UL) throw Error(ErrorCode::Overflow, "tower exponent out of range");
        t = pow(param_, t.get_ui());
      }
      return t;
    }
    case Kind::Explicit:
      if (n > values_.size())
        throw Error(ErrorCode::TooFewEntries, "explicit schedule has only " + std::to_string(values_.size()) + " terms");
      return values_[n - 1];
  }
  return 0;
}

std::string ExponentSchedule::to_string() const {
  switch (kind_) {
    case Kind::Factorial: return "factorial";
    case Kind::Geometric: return "geometric:" + lvt::to_string(param_);
    case Kind::Tower: return "tower:" + lvt::to_string(param_);
    case Kind::Explicit: {
      std::string s = "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + lvt::to_string(values_[i]);
      return s;
    }
  }
  return {};
}

}  // namespace lvt
