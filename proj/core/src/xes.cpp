#include "logknee/xes.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "logknee/errors.hpp"

namespace logknee::xes {

namespace {

namespace pt = boost::property_tree;

constexpr const char* kConceptName = "concept:name";
constexpr const char* kTimeTimestamp = "time:timestamp";

std::string attr(const pt::ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

// Reads the key/value attribute elements directly under `node`, filling
// the interpreted slots and collecting everything else as opaque text.
struct AttrScan {
  std::string concept_name;
  bool has_concept = false;
  std::string timestamp;
  bool has_timestamp = false;
  std::vector<XesAttribute> extras;
};

AttrScan scan_attributes(const pt::ptree& node) {
  AttrScan scan;
  for (const auto& [child_name, child] : node) {
    if (child_name == "<xmlattr>" || child_name == "trace" || child_name == "event") continue;
    const std::string key = attr(child, "key");
    const std::string value = attr(child, "value");
    if (key == kConceptName) {
      scan.concept_name = value;
      scan.has_concept = true;
    } else if (key == kTimeTimestamp) {
      scan.timestamp = value;
      scan.has_timestamp = true;
    } else if (!key.empty()) {
      scan.extras.push_back({child_name, key, value});
    }
  }
  return scan;
}

void append_escaped(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c; break;
    }
  }
}

void write_attribute_line(std::string& out, int indent, const XesAttribute& a) {
  out.append(indent, ' ');
  out += '<';
  out += a.element.empty() ? "string" : a.element;
  out += " key=\"";
  append_escaped(out, a.key);
  out += "\" value=\"";
  append_escaped(out, a.value);
  out += "\"/>\n";
}

}  // namespace

EventLog parse(std::string_view bytes, const ParseOptions& options) {
  pt::ptree doc;
  try {
    std::istringstream stream{std::string(bytes)};
    pt::read_xml(stream, doc, pt::xml_parser::no_comments | pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw MalformedXmlError(std::string("not well-formed XML: ") + e.what());
  }

  const auto log_node = doc.get_child_optional("log");
  if (!log_node) throw MalformedXmlError("no <log> root element");

  EventLog log;
  std::uint64_t ordinal = 0;
  std::uint64_t anonymous_traces = 0;
  std::unordered_set<std::string> seen_case_ids;

  for (const auto& [name, trace_node] : *log_node) {
    if (name != "trace") continue;
    Trace trace;
    AttrScan trace_attrs = scan_attributes(trace_node);
    trace.case_id = trace_attrs.has_concept && !trace_attrs.concept_name.empty()
                        ? trace_attrs.concept_name
                        : "trace_" + std::to_string(anonymous_traces++);
    trace.extras = std::move(trace_attrs.extras);
    if (!seen_case_ids.insert(trace.case_id).second)
      throw DuplicateCaseIdError("duplicate case id '" + trace.case_id + "'");

    for (const auto& [child_name, event_node] : trace_node) {
      if (child_name != "event") continue;
      AttrScan ev = scan_attributes(event_node);
      if (!ev.has_concept || ev.concept_name.empty())
        throw MissingActivityError("event " + std::to_string(ordinal) + " in trace '" +
                                   trace.case_id + "' has no concept:name");
      Event event;
      event.case_id = trace.case_id;
      event.activity = std::move(ev.concept_name);
      event.ordinal = ordinal++;
      event.extras = std::move(ev.extras);
      if (ev.has_timestamp) {
        auto ts = parse_iso8601(ev.timestamp);
        if (!ts)
          throw MalformedXmlError("unparseable time:timestamp '" + ev.timestamp + "' at event " +
                                  std::to_string(event.ordinal));
        event.timestamp = *ts;
      } else if (options.require_timestamps) {
        throw MissingTimestampError("event " + std::to_string(event.ordinal) + " ('" +
                                    event.activity + "') has no time:timestamp");
      }
      trace.events.push_back(std::move(event));
    }
    log.traces.push_back(std::move(trace));
  }
  log.refresh_totals();
  return log;
}

EventLog load_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  EventLog log = parse(buffer.str(), options);
  log.source_name = path.filename().string();
  return log;
}

std::string write(const EventLog& log) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<log xes.version=\"1.0\" xes.features=\"\">\n";
  for (const auto& trace : log.traces) {
    out += "  <trace>\n";
    write_attribute_line(out, 4, {"string", kConceptName, trace.case_id});
    for (const auto& a : trace.extras) write_attribute_line(out, 4, a);
    for (const auto& event : trace.events) {
      out += "    <event>\n";
      write_attribute_line(out, 6, {"string", kConceptName, event.activity});
      if (event.timestamp)
        write_attribute_line(out, 6, {"date", kTimeTimestamp, format_iso8601(*event.timestamp)});
      for (const auto& a : event.extras) write_attribute_line(out, 6, a);
      out += "    </event>\n";
    }
    out += "  </trace>\n";
  }
  out += "</log>\n";
  return out;
}

void save_file(const EventLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << write(log);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace logknee::xes
