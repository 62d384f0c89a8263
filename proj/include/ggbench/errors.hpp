#pragma once

#include <stdexcept>
#include <string>

namespace ggbench {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph text parsing
struct MalformedSyntax : Error { using Error::Error; };
struct EndpointOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

// rule engine
struct SpecMismatch : Error { using Error::Error; };
struct Unsatisfiable : Error { using Error::Error; };
struct GenerationTimeout : Error { using Error::Error; };

// distribution engine
struct NoClassifiableGraphs : Error { using Error::Error; };

// prompt builder
struct MissingExemplars : Error { using Error::Error; };
struct EmptyExemplarSet : Error { using Error::Error; };

// llm client
struct AuthError : Error { using Error::Error; };
struct RateLimited : Error { using Error::Error; };
struct Timeout : Error { using Error::Error; };
struct MalformedEndpointReply : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };

// metrics
struct NoValidGraphs : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// molhiv task
struct FileUnreadable : Error { using Error::Error; };
struct NoPositives : Error { using Error::Error; };
struct DegenerateModel : Error { using Error::Error; };
struct ScorerUnavailable : Error { using Error::Error; };
struct ScorerProtocolViolation : Error { using Error::Error; };

// experiment runner
struct ConfigError : Error { using Error::Error; };

}  // namespace ggbench
