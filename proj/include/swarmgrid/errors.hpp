#ifndef SWARMGRID_ERRORS_HPP
#define SWARMGRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swarmgrid {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The evaluation budget has no capacity left for the requested evaluations.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

/// An objective function produced NaN or +/-inf.
class NonFiniteResult : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A parameter exists but holds a value of a different type than requested.
class ConfigTypeError : public Error {
public:
    using Error::Error;
};

/// A required parameter key is absent.
class MissingConfig : public Error {
public:
    using Error::Error;
};

/// set_params (or a second minimize) was called while a run is in progress.
class OptimizerBusy : public Error {
public:
    using Error::Error;
};

class LineSearchFailed : public Error {
public:
    using Error::Error;
};

class UnknownFunction : public Error {
public:
    using Error::Error;
};

namespace exec {

class ExecutorShutDown : public Error {
public:
    using Error::Error;
};

/// A barrier party was abandoned (e.g. executor shutdown) while others waited.
class BrokenBarrierError : public Error {
public:
    using Error::Error;
};

} // namespace exec

namespace net {

class ProtocolError : public Error {
public:
    using Error::Error;
};

class ConnectionLost : public Error {
public:
    using Error::Error;
};

class ConnectError : public Error {
public:
    using Error::Error;
};

class BindError : public Error {
public:
    using Error::Error;
};

/// The server answered a request with a FailedReply.
class ServerFailedReply : public Error {
public:
    using Error::Error;
};

class AlreadyInitialized : public Error {
public:
    using Error::Error;
};

class DistributedEvalFailed : public Error {
public:
    using Error::Error;
};

} // namespace net

namespace stats {

class ZeroVariance : public Error {
public:
    using Error::Error;
};

class AllZeroDiffs : public Error {
public:
    using Error::Error;
};

} // namespace stats

} // namespace swarmgrid

#endif
