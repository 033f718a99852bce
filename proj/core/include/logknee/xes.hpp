#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "logknee/event_log.hpp"

namespace logknee::xes {

struct ParseOptions {
  // When false, an event without time:timestamp parses with an empty
  // timestamp instead of raising MissingTimestampError. Intended for
  // logs that will be ordered by file position.
  bool require_timestamps = true;
};

// Parses the XES subset used by this pipeline: log -> trace -> event,
// with <string key="concept:name" .../> and <date key="time:timestamp" .../>
// interpreted and every other attribute preserved verbatim.
// Throws MalformedXmlError, MissingActivityError, MissingTimestampError,
// DuplicateCaseIdError.
EventLog parse(std::string_view bytes, const ParseOptions& options = {});

EventLog load_file(const std::filesystem::path& path, const ParseOptions& options = {});

// Serializes the same subset. parse(write(log)) preserves all
// (case_id, activity, timestamp) triples and the opaque attributes.
std::string write(const EventLog& log);

void save_file(const EventLog& log, const std::filesystem::path& path);

}  // namespace logknee::xes
