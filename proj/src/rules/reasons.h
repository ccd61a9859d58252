#pragma once

/// @file
/// @brief The closed catalogue of diagnostic reason strings.
///
/// These strings are part of the tool's output contract; they are compared
/// byte-for-byte by downstream consumers and by the rule toggles. Do not
/// reword them.

#include <array>

namespace cantus {
namespace reasons {

inline constexpr const char* kIncorrectProgression = "Incorrect progression";
inline constexpr const char* kRepeatInMelody =
    "No repeated notes in melodic parts";
inline constexpr const char* kOctaveLeapOrigin =
    "Leap of an octave from a note other than the fundamental";
inline constexpr const char* kRepeatedNotes = "Repeated notes";
inline constexpr const char* kRepeatedPattern = "Repeated pattern";
inline constexpr const char* kSplitMelody = "Split melody";
inline constexpr const char* kDissonantContour = "Dissonant contour";
inline constexpr const char* kUnresolvedImpulse = "Unresolved impulse";
inline constexpr const char* kDissonantInterval =
    "Dissonant interval between parts";
inline constexpr const char* kOverMaxDistance =
    "Over maximum distance between parts";
inline constexpr const char* kPartsCross = "Parts can not cross";
inline constexpr const char* kIncorrectStartingNote = "Incorrect starting note";
inline constexpr const char* kIncorrectFinalNote = "Incorrect final note";
inline constexpr const char* kRestForbidden = "No rest for the wicked";
inline constexpr const char* kExtremeNoteTooShort = "Extreme note too short";

inline constexpr std::array<const char*, 15> kAll = {
    kIncorrectProgression, kRepeatInMelody,   kOctaveLeapOrigin,
    kRepeatedNotes,        kRepeatedPattern,  kSplitMelody,
    kDissonantContour,     kUnresolvedImpulse, kDissonantInterval,
    kOverMaxDistance,      kPartsCross,       kIncorrectStartingNote,
    kIncorrectFinalNote,   kRestForbidden,    kExtremeNoteTooShort,
};

}  // namespace reasons
}  // namespace cantus
