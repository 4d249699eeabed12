#pragma once
// JSON documents: fans, toric fans, A-cover charts and reports. Rationals are
// integers or "p/q" strings; points are "0", "inf", "@<rational>" or names.

#include "tfan/acover.hpp"
#include "tfan/toric.hpp"

#include <json.hpp>

#include <string>

namespace tfan {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the JSON pointer of the offending
/// value, or with the byte offset for syntax errors.
class ParseError : public Error {
 public:
  using Error::Error;
};

Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
/// Writes via a temporary file and rename, so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& text);

Json to_json(const Rational& q);
Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);
Json to_json(const Polyhedron& p);
Json to_json(const Cone& c);
Json to_json(const PDivisor& d);
Json to_json(const DivisorialFan& f);
Json to_json(const ToricFan& f);
Json to_json(const AffineSpaceCertificate& c);
Json to_json(const ACoverChart& c);
Json to_json(const std::vector<ACoverChart>& charts);
Json to_json(const Report& r);

DivisorialFan fan_from_json(const Json& j);
ToricFan toric_fan_from_json(const Json& j);
/// Accepts a chart list, an object with "charts", or a report whose
/// certificate holds the charts.
std::vector<ACoverChart> charts_from_json(const Json& j, std::size_t rank);

enum class Status { Pass, Fail, Error };
std::string to_string(Status s);

/// {format, version, command, status, findings[, certificate]}
Json report_document(const std::string& command, Status status, const Report& r,
                     const Json& certificate = nullptr);

}  // namespace tfan
