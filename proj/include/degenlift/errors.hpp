#ifndef DEGENLIFT_ERRORS_HPP
#define DEGENLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degenlift {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

#define DEGENLIFT_ERROR_TYPE(Name)                                                                 \
    class Name : public Error {                                                                    \
    public:                                                                                        \
        using Error::Error;                                                                        \
    }

DEGENLIFT_ERROR_TYPE(UnknownVariable);
DEGENLIFT_ERROR_TYPE(NegativeExponent);
DEGENLIFT_ERROR_TYPE(InexactDivision);
DEGENLIFT_ERROR_TYPE(ZeroDenominator);
DEGENLIFT_ERROR_TYPE(NotAUnit);
DEGENLIFT_ERROR_TYPE(TruncationMismatch);
DEGENLIFT_ERROR_TYPE(InvalidFamily);
DEGENLIFT_ERROR_TYPE(NonHomogeneous);
DEGENLIFT_ERROR_TYPE(InvalidStratum);
DEGENLIFT_ERROR_TYPE(DegenerateSingularity);
DEGENLIFT_ERROR_TYPE(IncompleteLocus);
DEGENLIFT_ERROR_TYPE(InvalidLine);
DEGENLIFT_ERROR_TYPE(NotOrdinary);
DEGENLIFT_ERROR_TYPE(AnsatzInapplicable);
DEGENLIFT_ERROR_TYPE(Unbalanced);
DEGENLIFT_ERROR_TYPE(InvalidArgument);

#undef DEGENLIFT_ERROR_TYPE

// A higher-order Kuranishi value was requested while a lower order is
// already nonzero.
class ObstructedAtLowerOrder : public Error {
public:
    explicit ObstructedAtLowerOrder(int order)
        : Error("obstructed at lower order " + std::to_string(order)), order_(order)
    {
    }
    int order() const { return order_; }

private:
    int order_;
};

}  // namespace degenlift

#endif
