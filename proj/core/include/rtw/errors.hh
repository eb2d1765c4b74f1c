/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_ERRORS_HH
#define RTW_GUARD_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtw
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A size limit of the workbench was exceeded (vertex cap, search kernel width).
    class CapacityError : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        private:
            std::size_t _offset;

        public:
            ParseError(const std::string & message, std::size_t offset) :
                Error(message + " (at byte " + std::to_string(offset) + ")"),
                _offset(offset)
            {
            }

            [[nodiscard]] auto offset() const -> std::size_t
            {
                return _offset;
            }
    };
}

#endif
