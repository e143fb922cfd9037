// Copyright 2026 The Partition Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "partition_lab/error.h"

namespace partition_lab {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NonPositivePart:
            return "NonPositivePart";
        case Errc::NotNonIncreasing:
            return "NotNonIncreasing";
        case Errc::EmptyPartition:
            return "EmptyPartition";
        case Errc::CutOutOfRange:
            return "CutOutOfRange";
        case Errc::FrameTooWide:
            return "FrameTooWide";
        case Errc::InconsistentFrames:
            return "InconsistentFrames";
        case Errc::InvalidMultiplicities:
            return "InvalidMultiplicities";
        case Errc::TooLargeForExhaustion:
            return "TooLargeForExhaustion";
        case Errc::FormMismatch:
            return "FormMismatch";
        case Errc::NotCoprime:
            return "NotCoprime";
        case Errc::ImaginaryResidueTooLarge:
            return "ImaginaryResidueTooLarge";
        case Errc::PrecisionExhausted:
            return "PrecisionExhausted";
        case Errc::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {
}

}  // namespace partition_lab
