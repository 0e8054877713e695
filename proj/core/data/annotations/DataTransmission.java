package com.matcha.annotations;

import java.lang.annotation.ElementType;
import java.lang.annotation.Retention;
import java.lang.annotation.RetentionPolicy;
import java.lang.annotation.Target;

/** Marks a variable involved in sending user data out of the app. */
@Retention(RetentionPolicy.SOURCE)
@Target({ElementType.FIELD, ElementType.LOCAL_VARIABLE, ElementType.PARAMETER})
public @interface DataTransmission {
    /** Ids of the {@link DataAccess} annotations whose data is transmitted. */
    String[] accessId();

    /** Collection answers; exactly one constant from each *_TRUE/*_FALSE pair. */
    CollectionAttribute[] collectionAttribute();

    /** Sharing answers; exactly one constant from each *_TRUE/*_FALSE pair. */
    SharingAttribute[] sharingAttribute();
}
