package com.matcha.annotations;

/** Sharing answers for {@link DataTransmission}. */
public enum SharingAttribute {
    SHARED_WITH_THIRD_PARTY_TRUE,
    SHARED_WITH_THIRD_PARTY_FALSE,
    ONLY_SHARED_WITH_SERVICE_PROVIDERS_TRUE,
    ONLY_SHARED_WITH_SERVICE_PROVIDERS_FALSE,
    ONLY_SHARED_FOR_LEGAL_PURPOSES_TRUE,
    ONLY_SHARED_FOR_LEGAL_PURPOSES_FALSE,
    ONLY_INITIATED_BY_USER_TRUE,
    ONLY_INITIATED_BY_USER_FALSE,
    ONLY_AFTER_GETTING_USER_CONSENT_TRUE,
    ONLY_AFTER_GETTING_USER_CONSENT_FALSE,
    ONLY_TRANSFERRING_ANONYMOUS_DATA_TRUE,
    ONLY_TRANSFERRING_ANONYMOUS_DATA_FALSE,
    SHARED_FOR_APP_FUNCTIONALITY,
    SHARED_FOR_ANALYTICS,
    SHARED_FOR_DEVELOPER_COMMUNICATIONS,
    SHARED_FOR_ADVERTISING_OR_MARKETING,
    SHARED_FOR_FRAUD_PREVENTION_SECURITY_COMPLIANCE,
    SHARED_FOR_PERSONALIZATION,
    SHARED_FOR_ACCOUNT_MANAGEMENT
}
