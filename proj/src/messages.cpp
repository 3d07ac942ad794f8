#include "swapqkd/messages.hpp"

#include <json.hpp>

namespace swapqkd {

ClassicalMessage ClassicalMessage::measurement_done(int seq, int round) {
  return {MessageType::MeasurementDone, seq, round, {}, {}, {}};
}

ClassicalMessage ClassicalMessage::result_request(int seq, int round) {
  return {MessageType::ResultRequest, seq, round, {}, {}, {}};
}

ClassicalMessage ClassicalMessage::result_announce(int seq, int round,
                                                   BellLabel label) {
  return {MessageType::ResultAnnounce, seq, round, bell_to_code(label), {}, {}};
}

ClassicalMessage ClassicalMessage::check_reveal(int seq, int round,
                                                BellLabel label) {
  return {MessageType::CheckReveal, seq, round, bell_to_code(label), {}, {}};
}

ClassicalMessage ClassicalMessage::check_verdict(int seq, int round,
                                                 bool match) {
  return {MessageType::CheckVerdict, seq, round, {}, match, {}};
}

ClassicalMessage ClassicalMessage::abort(int seq, std::string reason) {
  return {MessageType::Abort, seq, -1, {}, {}, std::move(reason)};
}

std::string_view message_type_name(MessageType type) {
  switch (type) {
    case MessageType::MeasurementDone: return "measurement_done";
    case MessageType::ResultRequest: return "result_request";
    case MessageType::ResultAnnounce: return "result_announce";
    case MessageType::CheckReveal: return "check_reveal";
    case MessageType::CheckVerdict: return "check_verdict";
    case MessageType::Abort: return "abort";
  }
  return "unknown";
}

std::string to_json_line(const ClassicalMessage& message) {
  nlohmann::ordered_json record;
  record["seq"] = message.seq;
  record["type"] = message_type_name(message.type);
  if (message.round >= 0) record["round"] = message.round;
  if (message.code) record["code"] = std::string(code_str(*message.code));
  if (message.match) record["match"] = *message.match;
  if (!message.reason.empty()) record["reason"] = message.reason;
  return record.dump();
}

}  // namespace swapqkd
