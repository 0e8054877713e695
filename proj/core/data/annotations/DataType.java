package com.matcha.annotations;

/** Google Play data safety data types. */
public enum DataType {
    Name,
    EmailAddress,
    UserId,
    Address,
    PhoneNumber,
    RaceAndEthnicity,
    PoliticalOrReligiousBeliefs,
    SexualOrientation,
    OtherPersonalInfo,
    UserPaymentInfo,
    PurchaseHistory,
    CreditScore,
    OtherFinancialInfo,
    CalendarEvents,
    Photos,
    Videos,
    Contacts,
    ApproximateLocation,
    PreciseLocation,
    HealthInfo,
    FitnessInfo,
    Emails,
    SmsOrMms,
    InAppMessages,
    DeviceOrOtherIds,
    FilesAndDocs,
    VoiceOrSoundRecordings,
    MusicFiles,
    OtherUserAudioFiles,
    AppInteractions,
    InstalledApps,
    InAppSearchHistory,
    OtherUserGeneratedContent,
    OtherUserActivities,
    WebBrowsingHistory,
    CrashLogs,
    Diagnostics,
    OtherAppPerformanceData
}
