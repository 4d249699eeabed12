// tfan: validate divisorial fans on P^1, test smoothness, build and verify
// A-coverings, and generate fans from complete toric fans.

#include "tfan/io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace tfan;

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct Outcome {
  Json doc;
  Status status;
  std::string summary;  // human-readable text; empty means "print the document"
};

struct Options {
  std::string out;
  bool json = false;
  bool close = false;
  std::optional<std::size_t> project;
};

std::string render(const std::string& command, Status status, const Report& r) {
  std::ostringstream os;
  os << command << ": " << to_string(status) << "\n";
  for (const auto& f : r.findings)
    os << "  [" << f.rule << "] " << f.location << ": " << f.message << "\n";
  return os.str();
}

Outcome finish(const std::string& command, Status status, const Report& r,
               const Json& certificate = nullptr, std::string extra = {}) {
  return {report_document(command, status, r, certificate), status,
          render(command, status, r) + extra};
}

DivisorialFan load_fan(const std::string& path, const Options& opt) {
  auto f = fan_from_json(parse_json(read_file(path)));
  return opt.close ? f.closed_under_intersection() : f;
}

// Slice and degree rule; their failure is a precondition error for the
// smoothness and covering commands.
Report preconditions(const DivisorialFan& f) {
  auto r = check_slice_rule(f);
  r.merge(check_degree_rule(f));
  return r;
}

Outcome cmd_validate(const std::string& path, const Options& opt) {
  auto r = validate(load_fan(path, opt));
  return finish("validate", r.ok() ? Status::Pass : Status::Fail, r);
}

Outcome cmd_smooth(const std::string& path, const Options& opt) {
  auto f = load_fan(path, opt);
  if (auto pre = preconditions(f); !pre.ok()) return finish("smooth", Status::Error, pre);
  auto r = is_smooth_fan(f);
  return finish("smooth", r.ok() ? Status::Pass : Status::Fail, r);
}

Outcome cmd_acover(const std::string& path, const Options& opt) {
  auto f = load_fan(path, opt);
  if (auto pre = preconditions(f); !pre.ok()) return finish("acover", Status::Error, pre);
  if (auto smooth = is_smooth_fan(f); !smooth.ok()) return finish("acover", Status::Error, smooth);
  ACoverCertificate cert;
  try {
    cert = build_acover(f);
  } catch (const PreconditionError& e) {
    Report r;
    r.add("precondition", "fan", e.what());
    return finish("acover", Status::Error, r);
  }
  Json payload = {{"coverage_ok", cert.coverage_ok},
                  {"markings_ok", cert.markings_ok},
                  {"charts", to_json(cert.charts)}};
  std::ostringstream os;
  for (std::size_t i = 0; i < cert.charts.size(); ++i) {
    const auto& c = cert.charts[i];
    os << "  chart " << i << " (" << to_string(c.origin.kind) << ", tail " << c.origin.tail
       << "): " << c.divisor << " -> " << c.certificate.cone << "\n";
  }
  os << "  " << cert.charts.size() << " charts, coverage " << (cert.coverage_ok ? "ok" : "FAILED")
     << ", markings " << (cert.markings_ok ? "ok" : "FAILED") << "\n";
  bool ok = cert.coverage_ok && cert.markings_ok;
  return finish("acover", ok ? Status::Pass : Status::Fail, cert.findings, payload, os.str());
}

Outcome cmd_downgrade(const std::string& path, const Options& opt) {
  auto toric = toric_fan_from_json(parse_json(read_file(path)));
  auto f = toric_downgrade(toric, opt.project.value_or(toric.rank - 1));
  return {to_json(f), Status::Pass, {}};
}

Outcome cmd_verify(const std::string& fan_path, const std::string& charts_path,
                   const Options& opt) {
  auto f = load_fan(fan_path, opt);
  auto charts = charts_from_json(parse_json(read_file(charts_path)), f.rank());
  auto r = verify_acover(f, charts);
  return finish("verify-acover", r.ok() ? Status::Pass : Status::Fail, r);
}

int emit(const Outcome& o, const Options& opt) {
  auto text = o.doc.dump(2) + "\n";
  if (!opt.out.empty()) write_file_atomic(opt.out, text);
  if (opt.json || o.summary.empty()) std::cout << text;
  else std::cout << o.summary;
  switch (o.status) {
    case Status::Pass: return kPass;
    case Status::Fail: return kFail;
    case Status::Error: return kInputError;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisorial fans on P^1: validation, smoothness and A-coverings"};
  app.require_subcommand(1);
  Options opt;
  std::string file, charts;

  auto common = [&](CLI::App* sub, bool fan_input) {
    sub->add_option("--out", opt.out, "Also write the JSON document to this file");
    sub->add_flag("--json", opt.json, "Print the JSON document instead of a summary");
    if (fan_input)
      sub->add_flag("--close-intersections", opt.close,
                    "Add pairwise intersections of members before checking");
  };
  auto* validate = app.add_subcommand("validate", "Check properness, slice and degree rules");
  auto* smooth = app.add_subcommand("smooth", "Check smoothness of the fan");
  auto* acover = app.add_subcommand("acover", "Build a certified A-covering");
  auto* downgrade = app.add_subcommand("downgrade", "Turn a complete toric fan into a fan on P^1");
  auto* verify = app.add_subcommand("verify-acover", "Check an A-covering against a fan");
  for (auto* sub : {validate, smooth, acover, downgrade}) {
    sub->add_option("file", file, "Input document")->required();
    common(sub, sub != downgrade);
  }
  verify->add_option("fan", file, "Fan document")->required();
  verify->add_option("charts", charts, "Charts or acover report")->required();
  common(verify, true);
  downgrade->add_option("--project", opt.project,
                        "Coordinate used as the projection (default: last)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (*validate) o = cmd_validate(file, opt);
    else if (*smooth) o = cmd_smooth(file, opt);
    else if (*acover) o = cmd_acover(file, opt);
    else if (*downgrade) o = cmd_downgrade(file, opt);
    else o = cmd_verify(file, charts, opt);
  } catch (const Error& e) {
    Report r;
    r.add("input", command, e.what());
    o = {report_document(command, Status::Error, r), Status::Error,
         render(command, Status::Error, r)};
  }
  try {
    return emit(o, opt);
  } catch (const std::exception& e) {
    std::cerr << "tfan: " << e.what() << "\n";
    return kInputError;
  }
}
