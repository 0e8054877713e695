package com.matcha.annotations;

import java.lang.annotation.ElementType;
import java.lang.annotation.Retention;
import java.lang.annotation.RetentionPolicy;
import java.lang.annotation.Target;

/** Marks a variable that holds user data read on the device. */
@Retention(RetentionPolicy.SOURCE)
@Target({ElementType.FIELD, ElementType.LOCAL_VARIABLE, ElementType.PARAMETER})
public @interface DataAccess {
    /** Unique id referenced by {@link DataTransmission#accessId()}. */
    String id();

    /** Data types held in the annotated variable. */
    DataType[] dataType();
}
